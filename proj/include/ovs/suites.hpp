#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ovs/core.hpp"

namespace ovs::suites {

struct SuiteConfig {
    std::uint64_t seed = 42;
    double eps = 1e-9;
    // 0 = use each suite's default case count
    int cases = 0;
    bool inject_fault = false;
};

struct CaseFailure {
    std::uint64_t seed = 0;
    int case_index = 0;
    std::string law;
    double residual = 0.0;
    std::string detail;
};

struct SuiteResult {
    std::string name;
    int cases = 0;
    int failures = 0;
    std::map<std::string, int> pass_counts;
    std::map<std::string, double> max_residual;
    std::vector<CaseFailure> failure_list;

    bool pass() const { return failures == 0; }
    void record(const Verdict& v, int case_index, std::uint64_t seed,
                const std::string& detail);
    void record_law(const std::string& law, bool ok, double residual, int case_index,
                    std::uint64_t seed, const std::string& detail);
};

SuiteResult run_lattice_laws(const SuiteConfig& cfg);
SuiteResult run_axioms(const SuiteConfig& cfg);
SuiteResult run_relations(const SuiteConfig& cfg);
SuiteResult run_weakrel(const SuiteConfig& cfg);
SuiteResult run_norming(const SuiteConfig& cfg);
SuiteResult run_cone(const SuiteConfig& cfg);
SuiteResult run_tv(const SuiteConfig& cfg);
SuiteResult run_jordan(const SuiteConfig& cfg);
SuiteResult run_degenerate(const SuiteConfig& cfg);

// Suites behind one CLI name: lattice, relations, weakrel, cone, bv, jordan, all.
// Throws std::invalid_argument for an unknown name.
std::vector<SuiteResult> run_named(const std::string& name, const SuiteConfig& cfg);

// Independent maximizer of c.u over the unit p-sphere (sampled starts plus
// coordinatewise hill climbing); oracle for the dual norm.
double sphere_max_oracle(const Vec& c, NormIndex p, std::uint64_t seed);

// Exact total variation by maximizing the partition sum over all 2^(m-1)
// sub-partitions of the grid; oracle for the grid-sum implementation.
double brute_force_tv(const std::vector<double>& values);

}  // namespace ovs::suites
