#pragma once

#include "blockade/rational.hpp"

#include <map>
#include <string>

namespace blockade {

// Parameterization of the constants the lemmas run under. "paper" mode is
// faithful to the source constants and has preconditions that no desk-scale
// graph satisfies; "demo" profiles relax magnitudes so every branch is
// exercisable on n <= 512. All derived thresholds (eps^(5d), y^(10d^2), ...)
// are computed from these entries, never hard-coded downstream.
struct ConstantsProfile {
    std::string name;
    bool demo = true;

    long d = 2;          // main exponent, paper d >= 40
    Rat c = Rat(1, 4);   // base ratio, paper 2^-8
    Rat eta = Rat(1, 8); // sparse-P5 constant, paper 2^-5
    Rat xi;              // Rodl sparsity target, c^16
    long a = 4;          // endgame exponent, paper a >= 2dt
    long t = 2;          // Rodl size exponent, paper t >= 36d^2
    Rat theta;           // Rodl size fraction

    // Derived thresholds.
    Rat pow_c(long e) const { return rat_pow(c, e); }

    static ConstantsProfile demo_small();
    static ConstantsProfile paper();
    static ConstantsProfile by_name(const std::string& name);

    std::map<std::string, Rat> entries() const;
    void apply_override(const std::string& symbol, const Rat& value);
};

inline ConstantsProfile ConstantsProfile::demo_small() {
    ConstantsProfile p;
    p.name = "demo-small";
    p.demo = true;
    p.d = 2;
    p.c = Rat(1, 4);
    p.eta = Rat(1, 8);
    p.xi = rat_pow(p.c, 16);
    p.a = 4;
    p.t = 2;
    p.theta = Rat(1, 4);
    return p;
}

inline ConstantsProfile ConstantsProfile::paper() {
    ConstantsProfile p;
    p.name = "paper";
    p.demo = false;
    p.d = 40;
    p.c = rat_pow(Rat(1, 2), 8);
    p.eta = rat_pow(Rat(1, 2), 5);
    p.xi = rat_pow(p.c, 16);
    p.t = 36 * p.d * p.d;
    p.a = 2 * p.d * p.t;
    p.theta = rat_pow(Rat(1, 2), 64);  // existence constant; any positive value
    return p;
}

}  // namespace blockade
