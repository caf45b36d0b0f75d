#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace cellkit {

struct UnsupportedType : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct WeightConflict : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Coxeter matrix plus weight function. family is one of A, B, D, I2, H3, F4 for
// catalog systems, or "sub" for parabolic subsystems and other raw matrices.
struct CoxeterSystem {
  std::string family;
  int rank = 0;    // number of generators (for I2 this is 2)
  int param = 0;   // rank for A/B/D, m for I2
  std::vector<std::string> labels;
  std::vector<std::vector<int>> matrix;
  std::vector<int> weights;

  int n() const { return static_cast<int>(labels.size()); }
  std::string name() const;
  // Key identifying the system up to generator order: matrix and weights.
  std::string key() const;
};

// family in {A, B, D, I2, H3, F4}; param is the rank (or m for I2). D_m is realized as
// B_m with L(omega) = 0. Weights may be given per generator; a single value is broadcast.
CoxeterSystem build_system(const std::string& family, int param, std::vector<int> weights);
// Validated system from a raw Coxeter matrix.
CoxeterSystem raw_system(std::vector<std::vector<int>> matrix, std::vector<int> weights,
                         std::vector<std::string> labels = {});
// Simply-laced D_m with generators u, s1, ..., s_{m-1} (u joined to s2).
CoxeterSystem native_d(int m, int weight = 1);
// Order predicted by the classification.
long long classical_order(const std::string& family, int param);

using Word = std::vector<int>;

struct ParabolicData;
struct ConjClasses;

// Enumerated finite Coxeter group. Elements are dense indices ordered by
// (length, lexicographically smallest reduced word); 0 is the identity.
class CoxeterGroup {
 public:
  explicit CoxeterGroup(CoxeterSystem sys, int cap = 20000);

  const CoxeterSystem& system() const { return sys_; }
  int rank() const { return n_; }
  int size() const { return size_; }
  int identity() const { return 0; }
  int longest() const { return size_ - 1; }
  int weight(int s) const { return sys_.weights[static_cast<std::size_t>(s)]; }

  int length(int w) const { return len_[static_cast<std::size_t>(w)]; }
  int weight_length(int w) const { return wlen_[static_cast<std::size_t>(w)]; }
  const Word& word(int w) const { return words_[static_cast<std::size_t>(w)]; }
  std::string word_str(int w) const;
  int lmul(int s, int w) const { return lmul_[static_cast<std::size_t>(s) * size_ + w]; }
  int rmul(int w, int s) const { return rmul_[static_cast<std::size_t>(s) * size_ + w]; }
  int inverse(int w) const { return inv_[static_cast<std::size_t>(w)]; }
  uint32_t left_descents(int w) const { return ldesc_[static_cast<std::size_t>(w)]; }
  uint32_t right_descents(int w) const { return rdesc_[static_cast<std::size_t>(w)]; }
  bool is_left_descent(int s, int w) const { return (ldesc_[static_cast<std::size_t>(w)] >> s) & 1u; }
  bool is_right_descent(int w, int s) const { return (rdesc_[static_cast<std::size_t>(w)] >> s) & 1u; }

  int multiply(int a, int b) const;
  int from_word(const Word& w) const;
  // Index of first element of each length, plus size() at the end.
  const std::vector<int>& length_starts() const { return lstart_; }
  int max_length() const { return len_.back(); }

  bool bruhat_leq(int x, int y) const;
  ParabolicData parabolic(const std::vector<int>& I) const;
  const ConjClasses& classes() const;

 private:
  void build_bruhat() const;

  CoxeterSystem sys_;
  int n_ = 0;
  int size_ = 0;
  std::vector<int> len_, wlen_, inv_, lmul_, rmul_, lstart_;
  std::vector<uint32_t> ldesc_, rdesc_;
  std::vector<Word> words_;
  std::shared_ptr<std::mutex> lazy_mu_ = std::make_shared<std::mutex>();
  mutable std::vector<std::vector<uint64_t>> below_;
  mutable std::shared_ptr<ConjClasses> classes_;
};

struct ParabolicData {
  std::vector<int> I;
  std::shared_ptr<CoxeterGroup> sub;
  std::vector<int> inject;  // W_I index -> W index
  std::vector<int> left_reps;   // X_I: minimal length in x W_I
  std::vector<int> right_reps;  // Y_I: minimal length in W_I w
};

struct ConjClasses {
  std::vector<int> class_of;
  std::vector<int> sizes;
  std::vector<int> reps;  // minimal length, then smallest index
  std::vector<std::vector<int>> members;
  int count() const { return static_cast<int>(sizes.size()); }
};

}  // namespace cellkit
