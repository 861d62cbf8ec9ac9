#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "cthecke/composition.hpp"
#include "cthecke/hecke.hpp"
#include "cthecke/rational.hpp"

namespace cthecke {

// Homogeneous polynomial in a fixed number of variables, stored sparsely as
// exponent vector -> coefficient with no zero coefficients kept.
class Polynomial {
public:
    explicit Polynomial(int nvars) : nvars_(nvars) {}

    int nvars() const { return nvars_; }
    const std::map<std::vector<int>, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const std::vector<int>& expo, const Rational& coeff);
    Polynomial& operator+=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // Deterministic text form: terms sorted by exponent vector, each printed
    // as "coeff*x1^a1*...", e.g. "1*x1^2 + 1*x1*x2 + 1*x2^2".
    std::string to_string() const;

private:
    int nvars_;
    std::map<std::vector<int>, Rational> terms_;
};

// Equal coefficients on every pair of monomials whose nonzero exponents read
// the same composition left to right.
bool is_quasisymmetric(const Polynomial& p);

// S = {s1 < ... < sk} in [1, n-1] maps to (s1, s2-s1, ..., n-sk).
Composition descent_set_to_composition(const std::set<int>& s, int n);
std::set<int> composition_to_descent_set(const Composition& alpha);

// Gessel's fundamental quasisymmetric function F_S in m variables: the sum
// over weakly increasing index sequences of length n, strict at the
// positions in S.
Polynomial fundamental(const std::set<int>& s, int n, int m);

// Sum of F over the descent sets of the standard composition tableaux of
// the shape; the image of the class basis under the characteristic map.
Polynomial quasischur(const Composition& alpha, int m);

// Schur polynomial via the standard-Young-tableau expansion into
// fundamentals. Independent of the composition-tableau machinery; used as
// the oracle in the refinement identity.
Polynomial schur(const Composition& lambda, int m);

// Multiset of descent compositions of a tableau basis, sorted. Expanding
// each through `fundamental` yields the characteristic of the spanned
// module.
std::vector<Composition> characteristic(const std::vector<Tableau>& basis);
std::vector<Composition> characteristic(const ClassPoset& e);

// Expand a descent-composition multiset through the fundamental basis.
Polynomial expand_characteristic(const std::vector<Composition>& chi, int m);

}  // namespace cthecke
