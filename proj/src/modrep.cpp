#include "cthecke/modrep.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cthecke {

RepMatrices build_rep(const ClassPoset& e) {
    const int d = e.size();
    const int n = e.member(0).size();
    RepMatrices rep;
    rep.dim = d;
    rep.generators = n - 1;
    rep.pi.reserve(rep.generators);
    for (int i = 1; i < n; ++i) {
        IntMat m(d, d);
        for (int s = 0; s < d; ++s) {
            auto r = apply_pi(i, e.member(s));
            if (r) m.at(e.index_of(*r), s) = 1;
        }
        rep.pi.push_back(std::move(m));
    }

    // defining relations, verified exactly
    for (int i = 0; i < rep.generators; ++i) {
        const IntMat& m = rep.pi[i];
        for (int c = 0; c < d; ++c) {
            int nz = 0;
            for (int r = 0; r < d; ++r)
                if (m.at(r, c) != 0) { ++nz; if (m.at(r, c) != 1) throw std::logic_error("build_rep: non 0/1 entry"); }
            if (nz > 1) throw std::logic_error("build_rep: column with several nonzero entries");
        }
        if (m * m != m) throw std::logic_error("build_rep: generator is not idempotent");
        if (i + 1 < rep.generators) {
            const IntMat& m2 = rep.pi[i + 1];
            if (m * m2 * m != m2 * m * m2) throw std::logic_error("build_rep: braid relation fails");
        }
        for (int j = i + 2; j < rep.generators; ++j)
            if (m * rep.pi[j] != rep.pi[j] * m) throw std::logic_error("build_rep: distant generators do not commute");
    }
    return rep;
}

CommutantBasis commutant(const RepMatrices& rep) {
    const int d = rep.dim;
    const int d2 = d * d;

    // rows of the stacked system (X M - M X)[a][b] = 0, unknowns X[r][c]
    // flattened as r*d + c
    IntMat stacked(rep.generators * d2, d2);
    int row = 0;
    for (const IntMat& m : rep.pi) {
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b, ++row)
                for (int k = 0; k < d; ++k) {
                    stacked.at(row, a * d + k) += m.at(k, b);
                    stacked.at(row, k * d + b) -= m.at(a, k);
                }
    }

    CommutantBasis out;
    out.dim = d2 - rank_fraction_free(stacked);

    std::vector<std::vector<Rational>> rows(stacked.rows(), std::vector<Rational>(d2));
    for (int r = 0; r < stacked.rows(); ++r)
        for (int c = 0; c < d2; ++c) rows[r][c] = Rational(stacked.at(r, c));
    for (const auto& vec : nullspace(std::move(rows), d2)) {
        RatMat x(d, d);
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) x.at(r, c) = vec[r * d + c];
        out.basis.push_back(std::move(x));
    }
    if (static_cast<int>(out.basis.size()) != out.dim)
        throw std::logic_error("commutant: fraction-free rank and nullspace basis disagree");
    for (const RatMat& x : out.basis)
        for (const IntMat& m : rep.pi) {
            RatMat rm = RatMat::from_int(m);
            if (x * rm != rm * x) throw std::logic_error("commutant: basis element fails to commute");
        }
    return out;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Indecomposable: return "indecomposable";
        case Verdict::DecomposableWitness: return "decomposable-witness";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

bool is_nontrivial_idempotent(const RatMat& x) {
    if (x.is_zero()) return false;
    if (x == RatMat::identity(x.rows())) return false;
    return x * x == x;
}

// Coordinates of y in the span of basis, if any: solve sum c_k basis[k] = y.
std::optional<std::vector<Rational>> coords_in_span(const std::vector<RatMat>& basis, const RatMat& y) {
    const int d = y.rows();
    const int k = static_cast<int>(basis.size());
    std::vector<std::vector<Rational>> rows;
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) {
            std::vector<Rational> row(k + 1);
            for (int t = 0; t < k; ++t) row[t] = basis[t].at(r, c);
            row[k] = y.at(r, c);
            rows.push_back(std::move(row));
        }
    std::vector<int> pivots = rref(rows, k + 1);
    if (!pivots.empty() && pivots.back() == k) return std::nullopt;  // inconsistent
    std::vector<Rational> coef(k);
    for (size_t r = 0; r < pivots.size(); ++r) coef[pivots[r]] = rows[r][k];
    return coef;
}

// Rational roots of the monic minimal polynomial of c (found through its
// Krylov sequence in matrix space), provided the polynomial is squarefree
// with all roots rational; then the spectral projectors are polynomials in
// c and any non-scalar c yields a nontrivial idempotent.
std::optional<RatMat> spectral_idempotent(const RatMat& c) {
    const int d = c.rows();
    std::vector<RatMat> powers{RatMat::identity(d)};
    std::vector<std::vector<Rational>> flat;
    auto flatten = [d](const RatMat& m) {
        std::vector<Rational> v(static_cast<size_t>(d) * d);
        for (int r = 0; r < d; ++r)
            for (int cc = 0; cc < d; ++cc) v[static_cast<size_t>(r) * d + cc] = m.at(r, cc);
        return v;
    };
    // grow the Krylov flag until c^k becomes dependent
    std::vector<Rational> minpoly;  // monic: c^k = sum_j minpoly[j] c^j
    for (int k = 1; k <= d * d + 1; ++k) {
        powers.push_back(powers.back() * c);
        std::vector<std::vector<Rational>> rows;
        const int cols = k + 1;
        std::vector<std::vector<Rational>> flats;
        for (int j = 0; j <= k; ++j) flats.push_back(flatten(powers[j]));
        for (int pos = 0; pos < d * d; ++pos) {
            std::vector<Rational> row(cols);
            for (int j = 0; j <= k; ++j) row[j] = flats[j][pos];
            rows.push_back(std::move(row));
        }
        auto basis = nullspace(std::move(rows), cols);
        if (!basis.empty()) {
            // normalize so the leading coefficient is 1
            std::vector<Rational> rel = basis.front();
            if (rel[k].is_zero()) return std::nullopt;  // dependence below the top power: retry not needed here
            minpoly.assign(k, Rational());
            for (int j = 0; j < k; ++j) minpoly[j] = -(rel[j] / rel[k]);
            break;
        }
    }
    const int deg = static_cast<int>(minpoly.size());
    if (deg <= 1) return std::nullopt;  // scalar element

    // minimal polynomial is t^deg - sum minpoly[j] t^j; rational roots of the
    // integer-cleared polynomial have numerator dividing its lowest nonzero
    // coefficient and denominator dividing its leading one
    auto eval = [&](const Rational& t) {
        Rational pw(1), acc;
        for (int j = 0; j < deg; ++j) { acc += minpoly[j] * pw; pw *= t; }
        return pw - acc;
    };
    long long den = 1;
    for (const Rational& q : minpoly) den = std::lcm(den, q.den());
    std::vector<long long> coeff(deg + 1);
    coeff[deg] = den;
    for (int j = 0; j < deg; ++j) coeff[j] = (-(minpoly[j] * Rational(den))).num();
    int low = 0;
    while (low < deg && coeff[low] == 0) ++low;

    auto divisors = [](long long v) {
        std::vector<long long> ds;
        v = v < 0 ? -v : v;
        for (long long p = 1; p * p <= v; ++p)
            if (v % p == 0) {
                ds.push_back(p);
                if (p != v / p) ds.push_back(v / p);
            }
        return ds;
    };

    std::vector<Rational> roots;
    if (low > 0) roots.push_back(Rational(0));
    for (long long num : divisors(coeff[low]))
        for (long long dd : divisors(coeff[deg]))
            for (int sgn : {1, -1}) {
                Rational cand(sgn * num, dd);
                if (eval(cand).is_zero() && std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
    if (static_cast<int>(roots.size()) != deg) return std::nullopt;  // not split or not squarefree

    // projector onto the first eigenvalue
    RatMat proj = RatMat::identity(d);
    for (int r = 1; r < deg; ++r) {
        RatMat factor = c - (roots[r] * RatMat::identity(d));
        proj = proj * factor;
        proj = (Rational(1) / (roots[0] - roots[r])) * proj;
    }
    if (is_nontrivial_idempotent(proj)) return proj;
    return std::nullopt;
}

// dim-2 commutant {a I + b N}: idempotents solve a quadratic with
// discriminant q^2 + 4p where N^2 = p I + q N; a rational square root gives
// the witness in closed form.
std::optional<RatMat> dim2_idempotent(const std::vector<RatMat>& basis) {
    const int d = basis.front().rows();
    const RatMat id = RatMat::identity(d);
    // pick a basis element independent of the identity
    std::optional<RatMat> n;
    for (const RatMat& b : basis)
        if (!(b - (b.at(0, 0) * id)).is_zero()) { n = b; break; }
    if (!n) return std::nullopt;
    auto pq = coords_in_span({id, *n}, (*n) * (*n));
    if (!pq) return std::nullopt;
    const Rational p = (*pq)[0], q = (*pq)[1];
    const Rational disc = q * q + Rational(4) * p;
    // rational square root, if it exists
    if (disc < Rational(0)) return std::nullopt;
    auto isqrt = [](long long v) {
        long long r = 0;
        while ((r + 1) * (r + 1) <= v) ++r;
        return r;
    };
    long long sn = isqrt(disc.num()), sd = isqrt(disc.den());
    if (sn * sn != disc.num() || sd * sd != disc.den()) return std::nullopt;
    Rational root(sn, sd);
    if (root.is_zero()) return std::nullopt;
    Rational b = Rational(1) / root;
    Rational a = (Rational(1) - b * q) / Rational(2);
    RatMat x = (a * id) + (b * (*n));
    if (is_nontrivial_idempotent(x)) return x;
    return std::nullopt;
}

}  // namespace

Certificate certify_indecomposable(const ClassPoset& e) {
    Certificate cert;
    cert.shape = e.shape().to_string();
    cert.dim_module = e.size();

    RepMatrices rep = build_rep(e);
    CommutantBasis cb = commutant(rep);
    cert.dim_end = cb.dim;

    if (cb.dim == 1) {
        cert.verdict = Verdict::Indecomposable;
        return cert;
    }

    // tier 1: basis elements and identity complements
    const RatMat id = RatMat::identity(e.size());
    for (const RatMat& b : cb.basis) {
        if (is_nontrivial_idempotent(b)) { cert.idempotent = b; break; }
        RatMat c = id - b;
        if (is_nontrivial_idempotent(c)) { cert.idempotent = c; break; }
    }
    // tier 2: spectral projector of a fixed combination of the basis
    if (!cert.idempotent) {
        RatMat c(e.size(), e.size());
        for (size_t k = 0; k < cb.basis.size(); ++k) c = c + (Rational(static_cast<long long>(k) + 1) * cb.basis[k]);
        cert.idempotent = spectral_idempotent(c);
    }
    // tier 3: closed form in a two-dimensional commutant
    if (!cert.idempotent && cb.dim == 2) cert.idempotent = dim2_idempotent(cb.basis);

    cert.verdict = cert.idempotent ? Verdict::DecomposableWitness : Verdict::Inconclusive;
    return cert;
}

ExtensionResult endomorphism_from_source_image(const ClassPoset& e, const std::vector<Rational>& v) {
    const int d = e.size();
    if (static_cast<int>(v.size()) != d)
        throw std::invalid_argument("endomorphism_from_source_image: vector dimension mismatch");
    RepMatrices rep = build_rep(e);
    std::vector<RatMat> gens;
    gens.reserve(rep.pi.size());
    for (const IntMat& m : rep.pi) gens.push_back(RatMat::from_int(m));

    // image of every member is forced from v along the Hasse diagram
    std::vector<std::optional<std::vector<Rational>>> image(d);
    image[e.source_index()] = v;
    std::vector<int> queue{e.source_index()};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int s = queue[qi];
        for (const ClassPoset::Cover& c : e.covers()) {
            if (c.from != s || image[c.to]) continue;
            image[c.to] = gens[c.label - 1].apply(*image[s]);
            queue.push_back(c.to);
        }
    }
    for (int s = 0; s < d; ++s)
        if (!image[s]) throw std::logic_error("endomorphism_from_source_image: class is not cyclic over the source");

    RatMat x(d, d);
    for (int s = 0; s < d; ++s)
        for (int r = 0; r < d; ++r) x.at(r, s) = (*image[s])[r];

    ExtensionResult out;
    for (size_t g = 0; g < gens.size(); ++g)
        if (x * gens[g] != gens[g] * x) {
            out.failure = "extension does not commute with generator " + std::to_string(g + 1);
            return out;
        }
    out.success = true;
    out.matrix = std::move(x);
    return out;
}

}  // namespace cthecke
