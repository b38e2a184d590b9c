#pragma once

#include "necklace/twisted_algebras.hpp"
#include "necklace/verify.hpp"

namespace necklace {

constexpr size_t kDefaultWordLimit = 10000;

// Freely reduced word in x_1..x_n; letters are (index, +-1).
class FreeWord {
 public:
  FreeWord() = default;
  static FreeWord gen(int i, int exp = 1);
  const std::vector<std::pair<int, int>>& letters() const { return letters_; }
  size_t length() const { return letters_.size(); }
  FreeWord operator*(const FreeWord& o) const;
  FreeWord inverse() const;
  bool operator==(const FreeWord& o) const { return letters_ == o.letters_; }
  // Conjugate w x_j w^-1 of a single generator; sets j when true.
  bool is_conjugate_of_generator(int* j = nullptr) const;
  std::string str() const;  // "x2^-1 x1 x2", "1" for the empty word

 private:
  void push(std::pair<int, int> l);
  std::vector<std::pair<int, int>> letters_;
};

struct FreeAut {
  int n = 0;
  std::vector<FreeWord> images, inverse_images;  // x_i -> images[i-1]

  static FreeAut identity(int n);
  // Checks inv really is the two-sided inverse.
  static FreeAut make(int n, std::vector<FreeWord> images, std::vector<FreeWord> inverse_images);
  FreeWord apply(const FreeWord& w, size_t limit = kDefaultWordLimit) const;
  FreeAut inverse() const { return {n, inverse_images, images}; }
  bool is_identity() const;
  bool is_conjugating() const;
  bool operator==(const FreeAut& o) const { return n == o.n && images == o.images; }
  std::string str() const;  // one "x1 -> ..." line per generator
};

// Function convention: (f o g)(x) = f(g(x)). Throws WordTooLong past the limit.
FreeAut aut_compose(const FreeAut& f, const FreeAut& g, size_t limit = kDefaultWordLimit);

FreeAut aut_g(int n, int i);  // x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
FreeAut aut_s(int n, int i);  // swaps x_i, x_{i+1}

// Word a.b acts as "a, then b": its automorphism is b o a.
template <>
struct TargetTraits<FreeAut> {
  static constexpr const char* kind = "automorphism";
  static FreeAut identity_like(const FreeAut& a) { return FreeAut::identity(a.n); }
  static FreeAut mul(const FreeAut& a, const FreeAut& b) { return aut_compose(b, a); }
  static FreeAut inverse(const FreeAut& a) { return a.inverse(); }
  static bool equal(const FreeAut& a, const FreeAut& b) { return a == b; }
  static bool is_identity(const FreeAut& a) { return a.is_identity(); }
  static Witness witness(const FreeAut& a, const FreeAut& b);
};

RepAssignment<FreeAut> lb_generators(int n);
VerifyReport lb_check(int n);
RepAssignment<FreeAut> zeta(int n);
// zeta(tau^n) = id, order of zeta(tau), centrality of rho(tau^n) in built-in matrix reps.
IdentityReport zeta_kernel_check(int n);
// Full NB_n suite under zeta plus the braid subgroup and conjugating-automorphism checks.
IdentityReport zeta_suite(int n);

}  // namespace necklace
