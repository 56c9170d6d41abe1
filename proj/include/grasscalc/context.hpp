#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "grasscalc/partition.hpp"

namespace grasscalc {

/// Ground (skew-)field of the Grassmannian. The quaternionic case shares
/// all ring data with the complex one; only the cohomological degrees
/// reported to the outside are doubled.
enum class Field { Complex, Quaternionic };

Field parse_field(const std::string& text); // "C" or "H"
std::string field_name(Field f);

/// Immutable descriptor of one Grassmannian G_{n,k} together with the
/// graded Schubert basis, enumerated once at construction. Copies share
/// the cached data; all members are const after construction, so values
/// can be used freely across threads.
class GrassContext {
public:
    GrassContext(int n, int k, Field field = Field::Complex);

    int n() const { return data_->n; }
    int k() const { return data_->k; }
    int cols() const { return data_->n - data_->k; } // box width n-k
    long dim() const { return data_->dim; }          // N = k(n-k)
    Field field() const { return data_->field; }
    /// Multiplier taking the complex grade r to the reported cohomological
    /// degree: 2 for C, 4 for H.
    int degree_scale() const { return data_->field == Field::Complex ? 2 : 4; }

    /// Number of Schubert classes of weight r (0 outside [0, N]).
    long betti(long r) const;
    /// Basis of H^{2r}: all partitions of weight r in the k x (n-k) box,
    /// in decreasing lexicographic order. Throws std::out_of_range.
    const std::vector<Partition>& basis(long r) const;
    /// Position of nu within basis(weight(nu)); throws std::domain_error
    /// if nu does not fit the box.
    long basis_index(const Partition& nu) const;
    bool in_box(const Partition& nu) const { return nu.fits_box(k(), cols()); }

    /// i_j = n-k+j - nu_j. Inverse of to_partition.
    IndexSet to_index(const Partition& nu) const;
    Partition to_partition(const IndexSet& i) const;
    /// i' = (n+1-i_k, ..., n+1-i_1); weight-reversing involution.
    IndexSet poincare_dual(const IndexSet& i) const;
    /// Box complement read backwards; the partition form of the dual.
    Partition dual_partition(const Partition& nu) const;

    const Partition& top_class() const { return data_->top; } // full box

    /// Ring-compatibility: same (n, k, field).
    bool same_ring(const GrassContext& other) const
    {
        return n() == other.n() && k() == other.k() && field() == other.field();
    }

    std::string name() const; // "G(4,2)" / "HG(4,2)"

private:
    struct Data {
        int n = 0;
        int k = 0;
        Field field = Field::Complex;
        long dim = 0;
        Partition top;
        std::vector<std::vector<Partition>> bases;        // by weight
        std::vector<std::map<Partition, long>> positions; // by weight
    };
    std::shared_ptr<const Data> data_;
};

/// Requires matching contexts; throws std::invalid_argument otherwise.
void require_same_ring(const GrassContext& a, const GrassContext& b);

} // namespace grasscalc
