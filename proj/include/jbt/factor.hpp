#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace jbt {
inline namespace factors {

enum class FactorKind { Matrix, Commutative, DirectSum };

/// Descriptor of a concrete finite-rank triple system.
///
/// Three shapes are supported:
///   Matrix(p,q)     complex p x q matrices with {x,y,z} = (x y* z + z y* x)/2,
///                   spectral norm, rank min(p,q);
///   Commutative(n)  C^n with {f,g,h} = f conj(g) h componentwise, sup norm,
///                   rank n;
///   DirectSum       finite sums of the above with the max norm; nested sums
///                   are flattened on construction, so the part list is flat.
///
/// Elements are stored as coordinate vectors in a fixed canonical basis:
/// row-major matrix units for Matrix, the standard basis for Commutative, and
/// the concatenation of part bases for DirectSum.
class Factor {
public:
    static Factor matrix(int rows, int cols);
    static Factor commutative(int n);
    static Factor direct_sum(std::vector<Factor> parts);

    /// Parse a factor spec string: "matrix:2x3", "commutative:4", or a
    /// '+'-joined direct sum like "matrix:2x2+commutative:1".
    static Factor parse(std::string_view spec);

    FactorKind kind() const { return kind_; }
    int dim() const { return dim_; }
    int rank() const { return rank_; }

    /// Matrix shape accessors; throw DomainError for other kinds.
    int rows() const;
    int cols() const;

    /// Flat part list of a direct sum; throws DomainError for other kinds.
    const std::vector<Factor>& parts() const;
    /// Coordinate offset of part `i` inside the concatenated basis.
    int part_offset(std::size_t i) const;

    /// True when the factor possesses a unitary tripotent (square matrix
    /// factors, commutative factors, and sums thereof).
    bool admits_unitary() const;

    std::string to_string() const;

    bool operator==(const Factor& other) const;
    bool operator!=(const Factor& other) const { return !(*this == other); }

private:
    Factor() = default;

    FactorKind kind_ = FactorKind::Commutative;
    int rows_ = 0; // Matrix: p; Commutative: n
    int cols_ = 0; // Matrix: q
    int dim_ = 0;
    int rank_ = 0;
    std::shared_ptr<const std::vector<Factor>> parts_; // DirectSum only
    std::vector<int> offsets_;                         // DirectSum prefix dims
};

} // namespace factors
} // namespace jbt
