#pragma once

#include "cellkit/analysis.hpp"
#include "cellkit/check.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace cellkit {

struct MixedAValues : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// W together with a parabolic W_I: induction of irreducibles of W_I and restriction
// of irreducibles of W, computed independently from class functions.
struct ParabolicLink {
  std::vector<int> I;
  ParabolicData P;
  std::shared_ptr<const Analysis> sub;
  std::vector<CharVector> ind;  // per irreducible of W_I
  std::vector<CharVector> res;  // per irreducible of W
};

// Memoized per (system, I).
std::shared_ptr<const ParabolicLink> parabolic_link(const Analysis& A, const std::vector<int>& I);

CharVector induce(const ParabolicLink& L, const CharVector& x);
CharVector restrict_to(const ParabolicLink& L, const CharVector& x);
// Constituents of Ind x with a_E equal to the common a-value of x in W_I.
CharVector truncated_induce(const Analysis& A, const ParabolicLink& L, const CharVector& x);
CharVector tensor_sign(const CharacterTable& T, const CharVector& x);
// Common a-value of the support of x; -1 for x = 0; throws MixedAValues otherwise.
int a_value(const Representations& R, const CharVector& x);
bool is_zero(const CharVector& x);

struct ConEntry {
  CharVector v;
  int a = 0;
  // One step per derivation: "J_{I}(E')" or "J_{I}(E') x sgn", E' written in W_I labels.
  std::vector<std::string> provenance;
};

// Con(W), sorted by (a, vector); closed under tensoring with sgn.
struct ConstructibleSet {
  std::vector<ConEntry> entries;
  int find(const CharVector& v) const;
  int size() const { return static_cast<int>(entries.size()); }
};

std::shared_ptr<const ConstructibleSet> constructible_set(const Analysis& A);

struct Family {
  std::vector<int> members;  // irreducible indices, increasing
  int a = 0;
  int two_sided = -1;        // block of wrep, -1 if the members disagree
};

struct FamilyPartition {
  std::vector<Family> families;  // ordered by smallest member
  std::vector<int> family_of;
  Check block_check{"families = blocks"};
  int count() const { return static_cast<int>(families.size()); }
};

std::shared_ptr<const FamilyPartition> families(const Analysis& A);

struct CuspidalInfo {
  bool cuspidal = true;
  // First witness of the hypothesis of the bijection lemma for F or F x sgn.
  std::string witness;
};

// Per family of families(A); iterates I by decreasing size.
std::vector<CuspidalInfo> cuspidal_families(const Analysis& A);
// Whether J_I^S maps the family F' of W_I bijectively onto the family F of W.
bool j_bijection(const Analysis& A, const ParabolicLink& L, const Family& Fsub, const Family& F);

struct DiamondResult {
  bool holds = false;
  Cyclo sum;
  std::string witness;
};

// sum over E of m_E / f_E == 1, exactly. Every label of m must occur in f with f > 0.
DiamondResult check_diamond(const std::map<std::string, Cyclo>& f, const std::map<std::string, long long>& m);

struct ConjectureReport {
  Check check{"left cells = Con(W)"};
  std::vector<int> cell_match;     // per left cell: index into Con(W), or -1
  std::vector<int> con_unmatched;  // Con(W) entries carried by no left cell
};

ConjectureReport verify_conjecture(const Analysis& A);

// Decomposition matrix of Con(W): rows irreducibles, columns constructible entries.
std::vector<std::vector<long long>> decomposition_matrix(const Analysis& A);

// Type F4, equal parameters: labels 1_2, 1_3, 4_1, 4_3, 4_4, 6_1, 6_2, 9_2, 9_3, 12_1, 16_1
// for the members of the family containing the 12-dimensional irreducible.
struct F4Family {
  int family = -1;
  std::map<std::string, int> index;  // label -> irreducible
};
F4Family f4_cuspidal_family(const Analysis& A);

struct F4Table {
  std::vector<std::string> rows;
  std::map<std::string, Cyclo> f;
  // Distinct nonzero restrictions to the family of Ind of Con(W_I), I = {s1,s2,s3}.
  std::vector<std::map<std::string, long long>> columns;
  std::vector<std::vector<std::string>> sources;  // Con(W_I) entries giving each column
};
F4Table f4_table(const Analysis& A);

}  // namespace cellkit
