#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cthecke/hecke.hpp"
#include "cthecke/linalg.hpp"

namespace cthecke {

// The class module in its tableau basis: one 0/1 matrix per generator, with
// M_i[t][s] = 1 iff pi_i maps member s to member t (columns of annihilated
// members are zero). Built matrices are verified against the defining
// relations of the algebra.
struct RepMatrices {
    int dim = 0;
    int generators = 0;              // n - 1
    std::vector<IntMat> pi;          // pi[i-1] is the matrix of pi_i
};

RepMatrices build_rep(const ClassPoset& e);

// Basis of {X : X M_i = M_i X for all i}, the endomorphism ring of the class
// module in matrix form. dim = d^2 - rank of the stacked commutation system;
// the rank is computed fraction-free on the integer system, the basis by a
// rational reduced nullspace.
struct CommutantBasis {
    int dim = 0;
    std::vector<RatMat> basis;
};

CommutantBasis commutant(const RepMatrices& rep);

// Indecomposability certificate for one class module. dim_end = 1 certifies
// an indecomposable module. When dim_end > 1 a nontrivial idempotent of the
// commutant is searched in tiers: basis elements and their identity
// complements, then spectral projectors of a fixed commutant element with
// squarefree rational minimal polynomial, then the closed-form solution in a
// two-dimensional commutant. The search is complete for the cases this
// project certifies; when it comes up empty the verdict is inconclusive
// rather than wrong.
enum class Verdict { Indecomposable, DecomposableWitness, Inconclusive };
std::string to_string(Verdict v);

struct Certificate {
    std::string shape;
    int class_id = -1;  // position among the shape's classes; -1 when unknown
    int dim_module = 0;
    int dim_end = 0;
    Verdict verdict = Verdict::Inconclusive;
    std::optional<RatMat> idempotent;
};

Certificate certify_indecomposable(const ClassPoset& e);

// Try to extend source |-> v to a module endomorphism using cyclicity: the
// image of every member is forced along the Hasse diagram, and the extension
// exists iff the forced matrix commutes with every generator. Failure is an
// ordinary outcome, not an error.
struct ExtensionResult {
    bool success = false;
    RatMat matrix;               // meaningful only on success
    std::string failure;         // which commutation broke
};

ExtensionResult endomorphism_from_source_image(const ClassPoset& e, const std::vector<Rational>& v);

}  // namespace cthecke
