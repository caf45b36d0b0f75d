#pragma once

#include "cellkit/coxeter.hpp"
#include "cellkit/cyclo.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace cellkit {

struct SplittingFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Multiplicity of each irreducible, indexed like the rows of a CharacterTable.
using CharVector = std::vector<long long>;

using Partition1 = std::vector<int>;  // weakly decreasing, no zeros
using BiPartition = std::pair<Partition1, Partition1>;

// Irreducible characters of a finite Coxeter group. Columns follow
// CoxeterGroup::classes(); all values are real.
struct CharacterTable {
  int order = 1;
  std::vector<int> class_sizes;
  std::vector<int> class_reps;
  std::vector<int> class_signs;            // (-1)^{l(rep)}
  std::vector<std::string> labels;
  std::vector<int> dims;
  std::vector<std::vector<Cyclo>> values;  // [irreducible][class]
  std::string model;                       // "A", "B", "I2" or "dixon"

  int size() const { return static_cast<int>(labels.size()); }
  int classes() const { return static_cast<int>(class_sizes.size()); }
  int index(const std::string& label) const;
  int trivial() const;
  int sign() const;
  // Multiplicities of a class function (values per class); throws if not a character.
  CharVector decompose(const std::vector<Cyclo>& f) const;
  std::vector<Cyclo> class_function(const CharVector& v) const;
  // Permutation E -> E (x) sgn.
  std::vector<int> sign_twist() const;
  // First orthogonality relations hold exactly.
  bool orthogonal() const;
};

// Character table by explicit models (types A, B, D and I2) or the class-algebra method.
CharacterTable character_table(const CoxeterGroup& G);
// Class-algebra (Dixon-Schneider) computation over F_p with exact lifting; generic labels.
CharacterTable dixon_table(const CoxeterGroup& G);

// Character of the geometric (reflection) representation, per class of G.
std::vector<Cyclo> reflection_character(const CoxeterGroup& G);
// Symmetric and exterior squares of a character, per class of G.
std::vector<Cyclo> sym2_character(const CoxeterGroup& G, const std::vector<Cyclo>& chi);
std::vector<Cyclo> ext2_character(const CoxeterGroup& G, const std::vector<Cyclo>& chi);

// Same irreducibles, possibly in a different order: returns perm with a.values[i] == b.values[perm[i]],
// or an empty vector if the tables differ.
std::vector<int> match_tables(const CharacterTable& a, const CharacterTable& b);

// Characters of symmetric and hyperoctahedral groups by the Murnaghan-Nakayama rule.
// cycles: cycle lengths; signed cycles carry a sign (+1 positive, -1 negative).
long long mn_character(const Partition1& lambda, const std::vector<int>& cycles);
long long mn_character_b(const BiPartition& ab, const std::vector<std::pair<int, int>>& cycles);
std::vector<Partition1> partitions(int n);
std::vector<BiPartition> bipartitions(int n);
std::string partition_str(const Partition1& p);
std::string bipartition_str(const BiPartition& p);

}  // namespace cellkit
