#include "prips/homology.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace prips {

Gf2 operator/(Gf2 a, Gf2 b)
{
    if (!b.bit) {
        throw std::domain_error("division by zero in GF(2)");
    }
    return a;
}

const char* to_string(Field field) { return field == Field::GF2 ? "gf2" : "q"; }

Field parse_field(std::string_view text)
{
    if (text == "gf2") {
        return Field::GF2;
    }
    if (text == "q") {
        return Field::Q;
    }
    throw PreconditionError("unknown field '" + std::string(text) + "'");
}

std::vector<Simplex> faces(const FlagComplex& k, int d)
{
    if (d < 0) {
        throw PreconditionError("faces: dimension must be non-negative");
    }
    return cliques(k.graph(), d + 1);
}

template <typename Scalar>
ChainComplexMatrices<Scalar> chain_complex(const FlagComplex& k)
{
    ChainComplexMatrices<Scalar> c;
    for (int d = 0;; ++d) {
        auto fd = faces(k, d);
        if (fd.empty()) {
            break;
        }
        if (fd.size() > kHomologyFaceBound) {
            throw CapacityError("chain_complex: " + std::to_string(fd.size()) + " faces in dimension " +
                                std::to_string(d) + " exceed the bound of " + std::to_string(kHomologyFaceBound));
        }
        c.faces.push_back(std::move(fd));
    }
    for (std::size_t d = 0; d < c.faces.size(); ++d) {
        const auto& cols = c.faces[d];
        if (d == 0) {
            c.boundary.emplace_back(DenseMatrix<Scalar>::Zero(0, static_cast<Eigen::Index>(cols.size())));
            continue;
        }
        const auto& rows = c.faces[d - 1];
        DenseMatrix<Scalar> m = DenseMatrix<Scalar>::Zero(static_cast<Eigen::Index>(rows.size()),
                                                          static_cast<Eigen::Index>(cols.size()));
        for (std::size_t j = 0; j < cols.size(); ++j) {
            const auto& v = cols[j].vertices();
            for (std::size_t drop = 0; drop < v.size(); ++drop) {
                std::vector<int> face;
                for (std::size_t i = 0; i < v.size(); ++i) {
                    if (i != drop) {
                        face.push_back(v[i]);
                    }
                }
                const Simplex f(std::move(face));
                const auto it = std::lower_bound(rows.begin(), rows.end(), f);
                const Scalar sign = (drop % 2 == 0) ? Scalar(1) : Scalar(-1);
                m(it - rows.begin(), static_cast<Eigen::Index>(j)) = sign;
            }
        }
        c.boundary.push_back(std::move(m));
    }
    return c;
}

template <typename Scalar>
bool boundary_squares_to_zero(const ChainComplexMatrices<Scalar>& c)
{
    for (std::size_t d = 2; d < c.boundary.size(); ++d) {
        const DenseMatrix<Scalar> product = c.boundary[d - 1] * c.boundary[d];
        for (Eigen::Index i = 0; i < product.rows(); ++i) {
            for (Eigen::Index j = 0; j < product.cols(); ++j) {
                if (!(product(i, j) == Scalar(0))) {
                    return false;
                }
            }
        }
    }
    return true;
}

template struct ChainComplexMatrices<Gf2>;
template struct ChainComplexMatrices<Rational>;
template ChainComplexMatrices<Gf2> chain_complex<Gf2>(const FlagComplex&);
template ChainComplexMatrices<Rational> chain_complex<Rational>(const FlagComplex&);
template bool boundary_squares_to_zero<Gf2>(const ChainComplexMatrices<Gf2>&);
template bool boundary_squares_to_zero<Rational>(const ChainComplexMatrices<Rational>&);

long BettiVector::alternating_sum() const
{
    long s = 0;
    for (std::size_t d = 0; d < b.size(); ++d) {
        s += (d % 2 == 0 ? 1 : -1) * b[d];
    }
    return s;
}

namespace {

template <typename Scalar>
BettiVector betti_over(const FlagComplex& k, Field field)
{
    const auto c = chain_complex<Scalar>(k);
    std::vector<long> ranks;
    for (const auto& m : c.boundary) {
        ranks.push_back(static_cast<long>(exact_rank<Scalar>(m)));
    }
    BettiVector out;
    out.field = field;
    for (std::size_t d = 0; d < c.faces.size(); ++d) {
        const long next = d + 1 < ranks.size() ? ranks[d + 1] : 0;
        out.b.push_back(static_cast<long>(c.faces[d].size()) - ranks[d] - next);
    }
    return out;
}

}  // namespace

BettiVector betti_numbers(const FlagComplex& k, Field field)
{
    return field == Field::GF2 ? betti_over<Gf2>(k, field) : betti_over<Rational>(k, field);
}

long euler_characteristic(const FlagComplex& k)
{
    long chi = 0;
    for (int d = 0;; ++d) {
        const auto n = static_cast<long>(faces(k, d).size());
        if (n == 0) {
            break;
        }
        chi += (d % 2 == 0 ? 1 : -1) * n;
    }
    return chi;
}

namespace {

// Depth-first search for a nonempty proper facet subset whose GF(2)
// boundary vanishes, i.e. every ridge is used an even number of times.
// Such a subset is closed, and it is exactly the support of a cycle.
class ProperCycleSearch {
public:
    explicit ProperCycleSearch(const std::vector<Simplex>& facets) : facet_count_(facets.size())
    {
        std::map<Simplex, std::size_t> ridge_ids;
        ridges_of_.resize(facet_count_);
        for (std::size_t f = 0; f < facet_count_; ++f) {
            const auto& v = facets[f].vertices();
            for (std::size_t drop = 0; drop < v.size(); ++drop) {
                std::vector<int> r;
                for (std::size_t i = 0; i < v.size(); ++i) {
                    if (i != drop) {
                        r.push_back(v[i]);
                    }
                }
                auto [it, inserted] = ridge_ids.emplace(Simplex(std::move(r)), ridge_ids.size());
                ridges_of_[f].push_back(it->second);
            }
        }
        parity_.assign(ridge_ids.size(), 0);
        last_user_.assign(ridge_ids.size(), 0);
        for (std::size_t f = 0; f < facet_count_; ++f) {
            for (std::size_t r : ridges_of_[f]) {
                last_user_[r] = f;
            }
        }
    }

    bool found() { return descend(0, 0); }

private:
    bool descend(std::size_t f, std::size_t chosen)
    {
        if (f == facet_count_) {
            return chosen > 0 && chosen < facet_count_;
        }
        for (int take = 1; take >= 0; --take) {
            if (take) {
                for (std::size_t r : ridges_of_[f]) {
                    parity_[r] ^= 1;
                }
            }
            bool ok = true;
            for (std::size_t r : ridges_of_[f]) {
                if (last_user_[r] == f && parity_[r] != 0) {
                    ok = false;
                    break;
                }
            }
            const bool hit = ok && descend(f + 1, chosen + static_cast<std::size_t>(take));
            if (take) {
                for (std::size_t r : ridges_of_[f]) {
                    parity_[r] ^= 1;
                }
            }
            if (hit) {
                return true;
            }
        }
        return false;
    }

    std::size_t facet_count_;
    std::vector<std::vector<std::size_t>> ridges_of_;
    std::vector<char> parity_;
    std::vector<std::size_t> last_user_;
};

}  // namespace

bool is_minimal_n_cycle(const FlagComplex& k, int n)
{
    const Purity p = is_pure(k);
    if (!p.pure || p.dimension != n) {
        throw PreconditionError("is_minimal_n_cycle: complex is not pure of dimension " + std::to_string(n));
    }
    if (k.facets().size() > kMinimalCycleFacetBound) {
        throw CapacityError("is_minimal_n_cycle: " + std::to_string(k.facets().size()) + " facets exceed the bound of " +
                            std::to_string(kMinimalCycleFacetBound));
    }
    if (betti_numbers(k, Field::GF2)[static_cast<std::size_t>(n)] < 1) {
        return false;
    }
    return !ProperCycleSearch(k.facets()).found();
}

}  // namespace prips
