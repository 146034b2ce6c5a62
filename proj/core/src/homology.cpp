#include "acat/homology.hpp"

#include <string>

namespace acat {

namespace {

long long to_integer(const Rational& x, const char* what) {
    if (boost::multiprecision::denominator(x) != 1)
        fail(errc::method_mismatch, std::string("internal: ") + what + " is not an integer");
    return boost::multiprecision::numerator(x).convert_to<long long>();
}

} // namespace

ChainComplex chain_complex(const Trisp& T) {
    ChainComplex K;
    const int top = T.max_dim();
    for (int k = 0; k <= top; ++k) K.dims.push_back(T.count(k));

    K.boundary.reserve(K.dims.size());
    K.boundary.emplace_back(0, K.dims.empty() ? 0 : K.dims[0]);
    for (int k = 1; k <= top; ++k) {
        Matrix d(K.dims[static_cast<size_t>(k) - 1], K.dims[static_cast<size_t>(k)]);
        for (int i = 0; i < T.count(k); ++i) {
            int sign = 1;
            for (int j = 0; j <= k; ++j) {
                d.at(T.face(k, i, j), i) += sign;
                sign = -sign;
            }
        }
        K.boundary.push_back(std::move(d));
    }

    for (size_t k = 2; k < K.boundary.size(); ++k)
        if (!multiply(K.boundary[k - 1], K.boundary[k]).is_zero())
            fail(errc::non_commuting, "internal: boundary of boundary is nonzero");
    return K;
}

ChainMap chain_map(const Trisp& T, const TrispMap& images, const ChainComplex& K) {
    ChainMap f;
    for (int k = 0; k <= T.max_dim(); ++k) {
        Matrix m(T.count(k), T.count(k));
        for (int i = 0; i < T.count(k); ++i) {
            const SimplexImage& img = images[static_cast<size_t>(k)][static_cast<size_t>(i)];
            if (!img.degenerate) m.at(img.index, i) = 1;
        }
        f.maps.push_back(std::move(m));
    }

    for (size_t k = 1; k < f.maps.size(); ++k)
        if (!(multiply(K.boundary[k], f.maps[k]) == multiply(f.maps[k - 1], K.boundary[k])))
            fail(errc::non_commuting, "internal: chain map does not commute with the boundary");
    return f;
}

ChainMap chain_map(const Trisp& T, const TrispMap& images) {
    return chain_map(T, images, chain_complex(T));
}

std::vector<int> betti(const ChainComplex& K) {
    const size_t n = K.dims.size();
    std::vector<int> ranks(n + 1, 0);
    for (size_t k = 1; k < n; ++k) ranks[k] = rank(K.boundary[k]);
    std::vector<int> b(n);
    for (size_t k = 0; k < n; ++k)
        b[k] = K.dims[k] - ranks[k] - ranks[k + 1];
    return b;
}

std::vector<int> betti(const Trisp& T) { return betti(chain_complex(T)); }

long long euler_char(const ChainComplex& K) {
    long long chi = 0;
    int sign = 1;
    for (int d : K.dims) {
        chi += sign * d;
        sign = -sign;
    }
    return chi;
}

long long euler_char(const Trisp& T) {
    long long chi = 0;
    for (int k = 0; k <= T.max_dim(); ++k) chi += (k % 2 == 0) ? T.count(k) : -T.count(k);
    return chi;
}

long long euler_from_homology(const ChainComplex& K) {
    long long chi = 0;
    int sign = 1;
    for (int b : betti(K)) {
        chi += sign * b;
        sign = -sign;
    }
    return chi;
}

long long euler_from_homology(const Trisp& T) { return euler_from_homology(chain_complex(T)); }

long long hopf_lefschetz(const ChainComplex& K, const ChainMap& f) {
    Rational L = 0;
    int sign = 1;
    for (const Matrix& m : f.maps) {
        L += sign * trace(m);
        sign = -sign;
    }
    (void)K;
    return to_integer(L, "chain-level Lefschetz number");
}

namespace {

// Incremental row-echelon accumulator used to pick independent vectors.
class Echelon {
public:
    // Reduces v against the stored rows; keeps it if independent.
    bool try_insert(std::vector<Rational> v) {
        for (size_t i = 0; i < rows_.size(); ++i) {
            const Rational& c = v[static_cast<size_t>(pivots_[i])];
            if (c != 0)
                for (size_t j = 0; j < v.size(); ++j)
                    if (rows_[i][j] != 0) v[j] -= c * rows_[i][j];
        }
        int pivot = -1;
        for (size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0) {
                pivot = static_cast<int>(j);
                break;
            }
        if (pivot < 0) return false;
        const Rational inv = Rational(1) / v[static_cast<size_t>(pivot)];
        for (auto& x : v) x *= inv;
        rows_.push_back(std::move(v));
        pivots_.push_back(pivot);
        return true;
    }

private:
    std::vector<std::vector<Rational>> rows_;
    std::vector<int> pivots_;
};

} // namespace

HomologyAnalysis homology_analysis(const ChainComplex& K, const ChainMap& f) {
    HomologyAnalysis out;
    Rational L = 0;

    const size_t n = K.dims.size();
    for (size_t k = 0; k < n; ++k) {
        const int nk = K.dims[k];

        // Cycle space Z_k.
        std::vector<std::vector<Rational>> cycles;
        if (k == 0) {
            for (int i = 0; i < nk; ++i) {
                std::vector<Rational> e(static_cast<size_t>(nk));
                e[static_cast<size_t>(i)] = 1;
                cycles.push_back(std::move(e));
            }
        } else {
            cycles = kernel_basis(K.boundary[k]);
        }

        // Boundary space B_k: independent columns of the next boundary.
        std::vector<std::vector<Rational>> bounds;
        if (k + 1 < n) {
            const Matrix& d = K.boundary[k + 1];
            for (int c : rref(d).pivot_cols) {
                std::vector<Rational> v(static_cast<size_t>(nk));
                for (int r = 0; r < nk; ++r) v[static_cast<size_t>(r)] = d.at(r, c);
                bounds.push_back(std::move(v));
            }
        }

        out.betti.push_back(static_cast<int>(cycles.size()) - static_cast<int>(bounds.size()));

        // Complement of B_k inside Z_k, extended greedily in basis order.
        Echelon ech;
        for (const auto& v : bounds) ech.try_insert(v);
        std::vector<std::vector<Rational>> complement;
        for (const auto& v : cycles)
            if (ech.try_insert(v)) complement.push_back(v);

        if (complement.empty()) {
            out.traces.emplace_back(0);
            continue;
        }

        // Express f(c_j) in the basis [bounds | complement]; the trace of the
        // induced map is read off the complement coefficients.
        const int nb = static_cast<int>(bounds.size());
        const int nc = static_cast<int>(complement.size());
        Matrix aug(nk, nb + nc + nc);
        for (int j = 0; j < nb; ++j)
            for (int r = 0; r < nk; ++r) aug.at(r, j) = bounds[static_cast<size_t>(j)][static_cast<size_t>(r)];
        for (int j = 0; j < nc; ++j)
            for (int r = 0; r < nk; ++r)
                aug.at(r, nb + j) = complement[static_cast<size_t>(j)][static_cast<size_t>(r)];
        const Matrix& fk = f.maps[k];
        for (int j = 0; j < nc; ++j)
            for (int r = 0; r < nk; ++r) {
                Rational w = 0;
                for (int c = 0; c < nk; ++c) {
                    const Rational& x = complement[static_cast<size_t>(j)][static_cast<size_t>(c)];
                    if (x != 0 && fk.at(r, c) != 0) w += fk.at(r, c) * x;
                }
                aug.at(r, nb + nc + j) = w;
            }

        const RrefResult rr = rref(std::move(aug));
        for (int c : rr.pivot_cols)
            if (c >= nb + nc)
                fail(errc::inconsistent_system,
                     "internal: image of a cycle left the cycle space");

        Rational tr = 0;
        for (int i = 0; i < rr.rank; ++i) {
            const int p = rr.pivot_cols[static_cast<size_t>(i)];
            if (p >= nb && p < nb + nc) tr += rr.reduced.at(i, nb + nc + (p - nb));
        }
        out.traces.push_back(tr);
        L += (k % 2 == 0) ? tr : -tr;
    }

    out.lefschetz = to_integer(L, "homology-level Lefschetz number");
    return out;
}

long long homology_lefschetz(const ChainComplex& K, const ChainMap& f) {
    return homology_analysis(K, f).lefschetz;
}

} // namespace acat
