#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pfa/errors.hpp"

namespace pfa {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// A finite group as an explicit multiplication table. Immutable after
// construction; element indices are assigned in deterministic construction
// order so all derived output is reproducible.
class FiniteGroup {
public:
    int order() const { return order_; }
    int identity() const { return identity_; }
    int mul(int a, int b) const { return table_[static_cast<size_t>(a) * order_ + b]; }
    int inv(int a) const { return inverse_[a]; }
    int conj(int g, int h) const { return mul(mul(inv(g), h), g); }  // g^-1 h g
    int pow(int a, long e) const;
    int element_order(int a) const;

    const std::vector<std::pair<std::string, int>>& generators() const { return generators_; }
    std::vector<int> generator_indices() const;
    const std::vector<std::string>& element_names() const { return element_names_; }

    // Sorted multiset of element orders; cheap isomorphism prescreen.
    const std::vector<int>& order_profile() const;
    bool is_abelian() const;
    bool is_cyclic() const;

    // Validates the group axioms: identity and inverses on all elements,
    // associativity exhaustively up to order 60 and on sampled triples above.
    static GroupPtr from_table(std::vector<int> table, int identity,
                               std::vector<std::pair<std::string, int>> generators,
                               std::vector<std::string> element_names = {});

private:
    FiniteGroup() = default;
    int order_ = 0;
    int identity_ = 0;
    std::vector<int> table_;
    std::vector<int> inverse_;
    std::vector<std::pair<std::string, int>> generators_;
    std::vector<std::string> element_names_;
    mutable std::vector<int> order_profile_;
    mutable std::vector<int> element_order_;
};

// --- Named families -------------------------------------------------------

GroupPtr cyclic_group(int n);
GroupPtr dihedral_group(int n);        // order 2n, <s,t | s^n=t^2=1, tst=s^-1>
GroupPtr binary_dihedral_group(int m); // order 4m, <k,q | k^m=q^2, q^-1 k q=k^-1>
GroupPtr symmetric_group(int n);       // n <= 5, permutation model
GroupPtr alternating_group(int n);     // n <= 5, permutation model
GroupPtr tetrahedral_group();          // A4
GroupPtr octahedral_group();           // S4
GroupPtr icosahedral_group();          // A5

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);

// action[q] is the image vector of the automorphism of K assigned to the
// element q of Q; must define a homomorphism Q -> Aut(K).
GroupPtr semidirect_product(const GroupPtr& k, const GroupPtr& q,
                            const std::vector<std::vector<int>>& action);

// --- Homomorphisms ---------------------------------------------------------

struct GroupHom {
    GroupPtr domain;
    GroupPtr codomain;
    std::vector<int> image;  // image[x] in codomain

    int apply(int x) const { return image[x]; }
    bool is_homomorphism() const;
    bool is_injective() const;
    bool is_surjective() const;
    bool is_automorphism() const;

    static GroupHom identity(const GroupPtr& g);
    // (second o first)(x) = second(first(x))
    static GroupHom compose(const GroupHom& second, const GroupHom& first);
    GroupHom inverse() const;  // requires bijective
};

// Conjugation h -> g^-1 h g as an automorphism.
GroupHom conjugation_automorphism(const GroupPtr& g, int by);

// --- Subgroups and quotients ------------------------------------------------

struct Subgroup {
    GroupPtr parent;
    std::vector<int> elements;  // sorted, closed under the parent operation
    GroupPtr group;             // abstract copy; element i <-> elements[i]
    GroupHom inclusion;         // group -> parent

    bool contains(int parent_index) const;
    int index_of(int parent_index) const;  // -1 if absent
};

Subgroup subgroup_generated(const GroupPtr& g, const std::vector<int>& gens);
Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup full_subgroup(const GroupPtr& g);
Subgroup center(const GroupPtr& g);
Subgroup centralizer(const GroupPtr& g, const std::vector<int>& elems);
Subgroup normalizer(const GroupPtr& g, const Subgroup& h);
bool is_normal(const GroupPtr& g, const Subgroup& h);
std::vector<std::vector<int>> conjugacy_classes(const GroupPtr& g);

struct Quotient {
    GroupPtr group;
    std::vector<int> class_of;         // parent index -> quotient index
    std::vector<int> representatives;  // quotient index -> parent index
    GroupHom projection;               // parent -> quotient group
};

Quotient quotient_by(const GroupPtr& g, const Subgroup& normal);

struct ShortExactSequence {
    GroupPtr kernel;
    GroupPtr total;
    GroupPtr quotient;
    GroupHom inclusion;   // kernel -> total
    GroupHom projection;  // total -> quotient

    // Exhaustive exactness check: inclusion injective, projection surjective,
    // image(inclusion) == kernel(projection).
    bool validate() const;
};

// For an index-2 kernel image: does some involution of `total` lie outside it?
bool splits_over_index2(const GroupPtr& total, const std::vector<int>& kernel_elements);

// --- Automorphisms and isomorphism -----------------------------------------

struct AutomorphismGroup {
    GroupPtr group;             // abstract Aut(G); element i <-> maps[i]
    std::vector<GroupHom> maps; // sorted by image vector
    int index_of(const std::vector<int>& image) const;
};

AutomorphismGroup automorphism_group(const GroupPtr& g, int bound = 120);

struct InnOut {
    Subgroup inner;   // Inn(G) inside the automorphism group
    Quotient outer;   // Aut/Inn with coset representatives
};

InnOut inner_and_outer(const GroupPtr& g, const AutomorphismGroup& aut);

// Order-profile prescreen, then backtracking over generator images.
std::optional<GroupHom> isomorphism(const GroupPtr& g, const GroupPtr& h, int bound = 240);
bool isomorphic(const GroupPtr& g, const GroupPtr& h, int bound = 240);

// Isomorphism required to intertwine two homomorphisms into a common codomain
// (phi_h o theta = phi_g). Used to deduplicate classification tuples.
std::optional<GroupHom> isomorphism_matching(const GroupPtr& g, const GroupHom& phi_g,
                                             const GroupPtr& h, const GroupHom& phi_h,
                                             int bound = 240);

// A small deterministic generating set (greedy, by descending element order).
std::vector<int> minimal_generating_set(const GroupPtr& g);

// words[x] = sequence of generator indices (into gens) whose product is x.
std::vector<std::vector<int>> generator_words(const GroupPtr& g, const std::vector<int>& gens);

}  // namespace pfa
