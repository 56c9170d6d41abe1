#include "grasscalc/partition.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace grasscalc {

namespace {

std::vector<int> parse_int_list(const std::string& text)
{
    std::vector<int> values;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        size_t pos = 0;
        int value;
        try {
            value = std::stoi(token, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("not an integer: '" + token + "'");
        }
        while (pos < token.size() && std::isspace(static_cast<unsigned char>(token[pos])))
            ++pos;
        if (pos != token.size())
            throw std::invalid_argument("not an integer: '" + token + "'");
        values.push_back(value);
    }
    return values;
}

} // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0)
            throw std::invalid_argument("partition parts must be nonnegative");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
}

Partition Partition::parse(const std::string& text)
{
    if (text.empty() || text == "0")
        return Partition{};
    return Partition(parse_int_list(text));
}

long Partition::weight() const
{
    return std::accumulate(parts_.begin(), parts_.end(), 0L);
}

bool Partition::fits_box(int rows, int cols) const
{
    return length() <= rows && (parts_.empty() || parts_.front() <= cols);
}

bool Partition::contains(const Partition& mu) const
{
    if (mu.length() > length())
        return false;
    for (int i = 0; i < mu.length(); ++i)
        if (mu.parts_[static_cast<size_t>(i)] > parts_[static_cast<size_t>(i)])
            return false;
    return true;
}

std::string Partition::to_string() const
{
    if (parts_.empty())
        return "0";
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0)
            out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

IndexSet::IndexSet(std::vector<int> indices) : indices_(std::move(indices))
{
    for (size_t i = 0; i < indices_.size(); ++i) {
        if (indices_[i] < 1)
            throw std::invalid_argument("index entries must be positive");
        if (i > 0 && indices_[i] <= indices_[i - 1])
            throw std::invalid_argument("index entries must be strictly increasing");
    }
}

IndexSet IndexSet::parse(const std::string& text)
{
    std::string body = text;
    if (body.size() >= 2 && body.front() == '[' && body.back() == ']')
        body = body.substr(1, body.size() - 2);
    if (body.empty())
        return IndexSet{};
    return IndexSet(parse_int_list(body));
}

long IndexSet::weight() const
{
    long total = 0;
    for (size_t j = 0; j < indices_.size(); ++j)
        total += indices_[j] - static_cast<long>(j) - 1;
    return total;
}

std::string IndexSet::to_string() const
{
    std::string out = "[";
    for (size_t i = 0; i < indices_.size(); ++i) {
        if (i > 0)
            out += ',';
        out += std::to_string(indices_[i]);
    }
    return out + "]";
}

} // namespace grasscalc
