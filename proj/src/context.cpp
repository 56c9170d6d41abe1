#include "grasscalc/context.hpp"

#include <functional>
#include <stdexcept>

namespace grasscalc {

Field parse_field(const std::string& text)
{
    if (text == "C" || text == "c")
        return Field::Complex;
    if (text == "H" || text == "h")
        return Field::Quaternionic;
    throw std::invalid_argument("field must be C or H, got '" + text + "'");
}

std::string field_name(Field f)
{
    return f == Field::Complex ? "C" : "H";
}

namespace {

// All partitions of weight r in a k x cols box, decreasing lexicographic.
// Choosing each part from its maximum downwards yields that order directly.
void enumerate_box(int k, int cols, long r, std::vector<int>& prefix,
                   std::vector<Partition>& out)
{
    if (r == 0) {
        out.emplace_back(prefix);
        return;
    }
    int rows_left = k - static_cast<int>(prefix.size());
    if (rows_left == 0)
        return;
    int cap = prefix.empty() ? cols : prefix.back();
    if (static_cast<long>(cap) * rows_left < r)
        return;
    int hi = static_cast<int>(std::min<long>(cap, r));
    for (int p = hi; p >= 1; --p) {
        if (static_cast<long>(p) * (rows_left - 1) < r - p)
            continue; // remaining rows cannot absorb the rest
        prefix.push_back(p);
        enumerate_box(k, cols, r - p, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

GrassContext::GrassContext(int n, int k, Field field)
{
    if (n < 2)
        throw std::domain_error("require n >= 2");
    if (k < 1 || 2 * k > n)
        throw std::domain_error("require 1 <= k <= n/2");
    auto data = std::make_shared<Data>();
    data->n = n;
    data->k = k;
    data->field = field;
    data->dim = static_cast<long>(k) * (n - k);
    data->top = Partition(std::vector<int>(static_cast<size_t>(k), n - k));
    data->bases.resize(static_cast<size_t>(data->dim) + 1);
    data->positions.resize(static_cast<size_t>(data->dim) + 1);
    for (long r = 0; r <= data->dim; ++r) {
        std::vector<int> prefix;
        enumerate_box(k, n - k, r, prefix, data->bases[static_cast<size_t>(r)]);
        const auto& basis = data->bases[static_cast<size_t>(r)];
        auto& pos = data->positions[static_cast<size_t>(r)];
        for (size_t i = 0; i < basis.size(); ++i)
            pos.emplace(basis[i], static_cast<long>(i));
    }
    data_ = std::move(data);
}

long GrassContext::betti(long r) const
{
    if (r < 0 || r > dim())
        return 0;
    return static_cast<long>(data_->bases[static_cast<size_t>(r)].size());
}

const std::vector<Partition>& GrassContext::basis(long r) const
{
    if (r < 0 || r > dim())
        throw std::out_of_range("grade " + std::to_string(r) + " outside [0, N]");
    return data_->bases[static_cast<size_t>(r)];
}

long GrassContext::basis_index(const Partition& nu) const
{
    if (!in_box(nu))
        throw std::domain_error("partition " + nu.to_string() + " outside the " +
                                std::to_string(k()) + "x" + std::to_string(cols()) + " box");
    const auto& pos = data_->positions[static_cast<size_t>(nu.weight())];
    return pos.at(nu);
}

IndexSet GrassContext::to_index(const Partition& nu) const
{
    if (!in_box(nu))
        throw std::domain_error("partition " + nu.to_string() + " outside the " +
                                std::to_string(k()) + "x" + std::to_string(cols()) + " box");
    std::vector<int> indices(static_cast<size_t>(k()));
    for (int j = 1; j <= k(); ++j)
        indices[static_cast<size_t>(j - 1)] = n() - k() + j - nu.part(j - 1);
    return IndexSet(std::move(indices));
}

Partition GrassContext::to_partition(const IndexSet& i) const
{
    if (i.length() != k())
        throw std::domain_error("index set must have k = " + std::to_string(k()) +
                                " entries");
    if (i.indices().back() > n())
        throw std::domain_error("index entries must not exceed n = " + std::to_string(n()));
    std::vector<int> parts(static_cast<size_t>(k()));
    for (int j = 1; j <= k(); ++j)
        parts[static_cast<size_t>(j - 1)] = n() - k() + j - i.indices()[static_cast<size_t>(j - 1)];
    return Partition(std::move(parts));
}

IndexSet GrassContext::poincare_dual(const IndexSet& i) const
{
    to_partition(i); // validity check
    std::vector<int> dual(static_cast<size_t>(k()));
    for (int j = 0; j < k(); ++j)
        dual[static_cast<size_t>(j)] = n() + 1 - i.indices()[static_cast<size_t>(k() - 1 - j)];
    return IndexSet(std::move(dual));
}

Partition GrassContext::dual_partition(const Partition& nu) const
{
    return to_partition(poincare_dual(to_index(nu)));
}

std::string GrassContext::name() const
{
    std::string prefix = field() == Field::Quaternionic ? "HG" : "G";
    return prefix + "(" + std::to_string(n()) + "," + std::to_string(k()) + ")";
}

void require_same_ring(const GrassContext& a, const GrassContext& b)
{
    if (!a.same_ring(b))
        throw std::invalid_argument("context mismatch: " + a.name() + " vs " + b.name());
}

} // namespace grasscalc
