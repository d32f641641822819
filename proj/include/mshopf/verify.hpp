#pragma once

#include <string>
#include <vector>

namespace mshopf {

struct CriterionResult {
    std::string id;
    std::string description;
    bool pass = false;
    std::string detail; // values / counts, or a counterexample spec on failure
};

// Criterion implementations. Parameters are explicit so the acceptance suite
// can pin the contract values while `verify` stays data-driven.
CriterionResult criterion_hopf_axioms(int v_max, int rho, int max_loops);
CriterionResult criterion_forest_lemma(int v_max, int rho, int max_loops);
CriterionResult criterion_antipode_forests(int v_max, int rho, int max_loops);
CriterionResult criterion_sunset_morphism(const std::vector<int>& rhos);
CriterionResult criterion_lemma_worked_identity();
CriterionResult criterion_oracle_concordance(int v_max);
CriterionResult criterion_counterterm_equivalence(int v_max, int rho, int max_loops);
CriterionResult criterion_antimorphism(int order, int rho_max, int pairs, unsigned seed);
CriterionResult criterion_effective_corollary(int order, int rho);

struct VerifyOptions {
    int max_vertices = 3;
    int rho = 2;
    int max_loops = 3;
    int order = 3;
    int pairs = 4;
    unsigned seed = 20260809;
};

// Suites: hopf, forest, antipode-forests, morphism, lemma, oracle,
// counterterms, antimorphism, effective, all. Unknown names throw
// PreconditionError.
std::vector<CriterionResult> run_verify(const std::string& suite, const VerifyOptions& options);

} // namespace mshopf
