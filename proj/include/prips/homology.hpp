#ifndef PRIPS_HOMOLOGY_HPP
#define PRIPS_HOMOLOGY_HPP

#include <cstddef>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "prips/complex.hpp"
#include "prips/rational.hpp"

namespace prips {

/// The two-element field.
struct Gf2 {
    bool bit = false;

    Gf2() = default;
    Gf2(int v) : bit((v & 1) != 0) {}  // NOLINT: implicit by design, mirrors built-in scalars

    friend Gf2 operator+(Gf2 a, Gf2 b) { return Gf2(a.bit != b.bit); }
    friend Gf2 operator-(Gf2 a, Gf2 b) { return a + b; }
    friend Gf2 operator*(Gf2 a, Gf2 b) { return Gf2(a.bit && b.bit); }
    friend Gf2 operator/(Gf2 a, Gf2 b);
    Gf2 operator-() const { return *this; }
    Gf2& operator+=(Gf2 o) { return *this = *this + o; }
    Gf2& operator-=(Gf2 o) { return *this = *this - o; }
    Gf2& operator*=(Gf2 o) { return *this = *this * o; }
    friend bool operator==(Gf2 a, Gf2 b) { return a.bit == b.bit; }
};

}  // namespace prips

namespace Eigen {

template <>
struct NumTraits<prips::Gf2> : GenericNumTraits<prips::Gf2> {
    using Real = prips::Gf2;
    using NonInteger = prips::Gf2;
    using Literal = prips::Gf2;
    using Nested = prips::Gf2;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 0,
        RequireInitialization = 0,
        ReadCost = 1,
        AddCost = 1,
        MulCost = 1
    };
    static prips::Gf2 epsilon() { return prips::Gf2(0); }
    static prips::Gf2 dummy_precision() { return prips::Gf2(0); }
    static int digits10() { return 0; }
};

}  // namespace Eigen

namespace prips {

enum class Field { GF2, Q };

const char* to_string(Field field);

/// Accepts "gf2" or "q".
Field parse_field(std::string_view text);

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Rank by exact Gaussian elimination. Scalar must be an exact field.
template <typename Scalar>
Eigen::Index exact_rank(DenseMatrix<Scalar> m)
{
    const Scalar zero(0);
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < m.cols() && r < m.rows(); ++c) {
        Eigen::Index pivot = r;
        while (pivot < m.rows() && m(pivot, c) == zero) {
            ++pivot;
        }
        if (pivot == m.rows()) {
            continue;
        }
        m.row(pivot).swap(m.row(r));
        for (Eigen::Index i = r + 1; i < m.rows(); ++i) {
            if (!(m(i, c) == zero)) {
                const Scalar factor = m(i, c) / m(r, c);
                m.row(i) -= factor * m.row(r);
            }
        }
        ++r;
    }
    return r;
}

/// All d-dimensional faces (cliques of size d + 1) in lexicographic order.
std::vector<Simplex> faces(const FlagComplex& k, int d);

/// Largest number of faces per dimension accepted by the dense eliminations.
inline constexpr std::size_t kHomologyFaceBound = 1500;

/// Boundary matrices of the simplicial chain complex. boundary[d] maps
/// d-chains to (d-1)-chains; boundary[0] has no rows.
template <typename Scalar>
struct ChainComplexMatrices {
    std::vector<std::vector<Simplex>> faces;
    std::vector<DenseMatrix<Scalar>> boundary;

    int top_dimension() const { return static_cast<int>(faces.size()) - 1; }
};

/// Throws CapacityError when some dimension exceeds kHomologyFaceBound.
template <typename Scalar>
ChainComplexMatrices<Scalar> chain_complex(const FlagComplex& k);

/// Every composite boundary[d - 1] * boundary[d] vanishes.
template <typename Scalar>
bool boundary_squares_to_zero(const ChainComplexMatrices<Scalar>& c);

struct BettiVector {
    std::vector<long> b;
    Field field = Field::GF2;

    long operator[](std::size_t d) const { return d < b.size() ? b[d] : 0; }
    long alternating_sum() const;
};

BettiVector betti_numbers(const FlagComplex& k, Field field = Field::GF2);

long euler_characteristic(const FlagComplex& k);

/// Largest facet count accepted by is_minimal_n_cycle.
inline constexpr std::size_t kMinimalCycleFacetBound = 24;

/// k carries a GF(2) n-cycle and no proper set of its facets does. Requires
/// k pure of dimension n; more than kMinimalCycleFacetBound facets throws
/// CapacityError.
bool is_minimal_n_cycle(const FlagComplex& k, int n);

extern template struct ChainComplexMatrices<Gf2>;
extern template struct ChainComplexMatrices<Rational>;
extern template ChainComplexMatrices<Gf2> chain_complex<Gf2>(const FlagComplex&);
extern template ChainComplexMatrices<Rational> chain_complex<Rational>(const FlagComplex&);
extern template bool boundary_squares_to_zero<Gf2>(const ChainComplexMatrices<Gf2>&);
extern template bool boundary_squares_to_zero<Rational>(const ChainComplexMatrices<Rational>&);

}  // namespace prips

#endif  // PRIPS_HOMOLOGY_HPP
