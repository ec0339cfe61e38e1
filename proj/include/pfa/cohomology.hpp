#pragma once

#include <memory>
#include <string>
#include <vector>

#include "pfa/group.hpp"
#include "pfa/linalg.hpp"

namespace pfa {

// A finitely generated abelian group Z^rank_free + sum_i Z_torsion[i] with a
// G-action given by one integer matrix per group element (columns act on
// coordinate vectors; torsion coordinates are read mod their order).
struct GModule {
    GroupPtr group;
    int rank_free = 0;
    std::vector<i64> torsion;
    std::vector<IntMat> action;

    int dim() const { return rank_free + static_cast<int>(torsion.size()); }
    bool is_free() const { return torsion.empty(); }
    // torsion order of coordinate i (0 for free coordinates); free coords first
    i64 coord_order(int i) const { return i < rank_free ? 0 : torsion[i - rank_free]; }
    void reduce(std::vector<i64>& v) const;  // fold torsion coords into [0, t)
    std::vector<i64> act(int g, const std::vector<i64>& v) const;
    bool validate() const;

    static GModule trivial(const GroupPtr& g, int rank_free, std::vector<i64> torsion);
    // Z_m with g acting as multiplication by mult[g]
    static GModule cyclic(const GroupPtr& g, i64 m, const std::vector<i64>& mult);
    GModule restricted(const Subgroup& h) const;
};

// Normalized bar cochain of one degree: a function on k-tuples of non-identity
// group elements with values in the module, stored densely as
// values[tuple_index * dim + coord]. Tuple index is mixed-radix over the
// non-identity elements in increasing index order.
struct Cochain {
    int degree = 0;
    std::vector<i64> values;
};

size_t bar_tuple_count(const GroupPtr& g, int degree);
Cochain zero_cochain(const GModule& m, int degree);
Cochain random_cochain(const GModule& m, int degree, unsigned seed);
Cochain apply_delta(const GModule& m, const Cochain& c);
bool is_cocycle(const GModule& m, const Cochain& c);
// Difference z1 - z2 reduced mod torsion.
Cochain cochain_sub(const GModule& m, const Cochain& a, const Cochain& b);
// Pull back along the inclusion of a subgroup (module restricted alongside).
Cochain restrict_cochain(const GModule& m, const Cochain& c, const Subgroup& h);

struct CohomologyOptions {
    size_t enum_budget = 1u << 20;      // max |C^j| for the enumeration route
    size_t field_max_rows = 30000;      // max (|G|-1)^{k+1} d for the F_p route
    size_t integer_max_rows = 450000;   // max (|G|-1)^{k+1} d, free coefficients
    size_t integer_max_cols = 20000;    // max (|G|-1)^k d, free coefficients
    size_t integer_max_prev = 2200;     // max (|G|-1)^{k-1} d, free coefficients
    bool allow_normal_sylow = true;     // reduction to a normal Sylow subgroup
};

struct CohomologyGroup {
    int degree = 0;
    GModule module;
    // ascending divisibility order; 0 denotes a free factor (degree 0 only)
    std::vector<i64> invariant_factors;
    std::vector<Cochain> generator_cocycles;
    std::vector<std::string> generator_names;

    i64 order() const;  // product of factors; throws if a free factor exists

    struct Presenter;
    std::shared_ptr<const Presenter> presenter;
};

// Smith-normal-form computation of ker delta^k / im delta^{k-1} on normalized
// bar cochains. Route depends on the coefficients: exact integer lattice work
// for free modules, F_p elimination for prime torsion, direct enumeration for
// tiny complexes, and reduction to a normal Sylow subgroup (with an explicit
// transfer-lifted cocycle, verified per run) when the group is too large for
// the direct routes.
CohomologyGroup cohomology(const GModule& m, int degree, const CohomologyOptions& opt = {});

// Coordinates of a cocycle's class in the generator basis (entry i mod
// invariant_factors[i]). Throws if z is not a cocycle of the same complex.
std::vector<i64> class_coordinates(const CohomologyGroup& h, const Cochain& z);
bool is_coboundary(const CohomologyGroup& h, const Cochain& z);

// Matrix of H^k(G;M) -> H^k(H;M|H) in the computed generator bases:
// column j = coordinates of the restriction of generator j.
IntMat restriction_matrix(const CohomologyGroup& cg, const CohomologyGroup& ch,
                          const GModule& m, const Subgroup& h);

// Integral 2-cocycle of a character G -> Q/Z given by chi[x]/den; requires
// chi to be a homomorphism into (1/den)Z/Z with chi[identity] = 0. The class
// corresponds to the character under H^2(G;Z) = Hom(G, Q/Z).
Cochain character_cocycle(const GroupPtr& g, const std::vector<i64>& chi, i64 den);

// Q = Z_2 realizability shortcut: true iff some gamma-fixed g with
// gamma^2 = (h -> g^-1 h g) exists. gamma^2 must be inner.
bool obstruction_vanishes(const GroupPtr& k, const GroupHom& gamma);

// The degree-3 facts used for the order-4p semidirect products: with twisted
// Z_p coefficients H^3 is Z_p, restriction to Z_p is an isomorphism and to
// every Z_4 it is zero; untwisted H^3 vanishes.
struct TwistedLensReport {
    int p = 0;
    std::vector<i64> twisted_factors;    // expected {p}
    bool restriction_to_p_iso = false;
    bool z4_h3_trivial = false;          // H^3(Z_4; twisted Z_p) = 0
    std::vector<i64> untwisted_factors;  // expected {}
    bool ok() const {
        return twisted_factors == std::vector<i64>{p} && restriction_to_p_iso &&
               z4_h3_trivial && untwisted_factors.empty();
    }
};
TwistedLensReport twisted_lens_check(int p, const CohomologyOptions& opt = {});

// Builds Z_p x| Z_4 with a = smallest multiplicative order-4 residue mod p.
GroupPtr lens_semidirect_group(int p);
// The twist sending the Z_4 generator to -1 on Z_p (trivial when twist=false).
GModule lens_coefficients(const GroupPtr& g, int p, bool twist);

// The integral restriction table of the order-8 dihedral group: rows are the
// named degree-2 classes (from the characters e, f), columns the proper
// nontrivial subgroups up to conjugacy, entries coordinates in the target's
// named basis.
struct D4RestrictionTable {
    std::vector<std::string> columns;
    std::vector<std::string> rows;
    // entries[r][c]: coefficient vector in the target's named basis
    std::vector<std::vector<std::vector<i64>>> entries;
};
D4RestrictionTable d4_restriction_table();

}  // namespace pfa
