#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "necklace/errors.hpp"
#include "necklace/matrix.hpp"
#include "necklace/relations.hpp"

namespace necklace {

struct Witness {
  std::string description;
  long basis_index = -1;  // matrix targets: 0-based column where the images differ
  std::vector<std::string> lhs_image, rhs_image;
};

// Target operations used by word evaluation. mul(a, b) is the image of the word a.b.
template <class T>
struct TargetTraits;

template <>
struct TargetTraits<Matrix> {
  static constexpr const char* kind = "matrix";
  static Matrix identity_like(const Matrix& m) { return Matrix::identity(m.dim()); }
  static Matrix mul(const Matrix& a, const Matrix& b) { return a * b; }
  static Matrix inverse(const Matrix& a) { return a.inverse(); }
  static bool equal(const Matrix& a, const Matrix& b) { return a == b; }
  static bool is_identity(const Matrix& a) { return a.is_identity(); }
  static Witness witness(const Matrix& a, const Matrix& b);
};

template <class T>
class RepAssignment {
 public:
  using Traits = TargetTraits<T>;

  RepAssignment() = default;
  RepAssignment(std::string name, int n) : name_(std::move(name)), n_(n) {}

  // The inverse is checked to be two-sided.
  void assign(Gen g, T image, T inverse) {
    if (!identity_) identity_ = Traits::identity_like(image);
    if (!Traits::equal(Traits::mul(image, inverse), *identity_) || !Traits::equal(Traits::mul(inverse, image), *identity_))
      throw std::invalid_argument("assigned inverse of " + g.str() + " is not two-sided");
    images_.insert_or_assign(g, std::pair<T, T>{std::move(image), std::move(inverse)});
  }
  void assign(Gen g, T image) {
    T inv = Traits::inverse(image);
    assign(g, std::move(image), std::move(inv));
  }
  // Assigns without re-checking (inverse derived from already verified images).
  void assign_trusted(Gen g, T image, T inverse) {
    if (!identity_) identity_ = Traits::identity_like(image);
    images_.insert_or_assign(g, std::pair<T, T>{std::move(image), std::move(inverse)});
  }

  bool covers(Gen g) const { return images_.count(g) > 0; }
  const T& image(Gen g) const { return at(g).first; }
  const T& inverse_image(Gen g) const { return at(g).second; }
  const T& identity() const { return *identity_; }
  std::vector<Gen> generators() const {
    std::vector<Gen> out;
    for (auto& [g, _] : images_) out.push_back(g);
    return out;
  }
  const std::string& name() const { return name_; }
  void set_name(std::string s) { name_ = std::move(s); }
  int n() const { return n_; }

  T eval(const GenWord& w) const {
    if (w.empty()) return *identity_;
    const auto& L = w.letters();
    T acc = L[0].exp > 0 ? image(L[0].gen) : inverse_image(L[0].gen);
    for (size_t k = 1; k < L.size(); ++k)
      acc = Traits::mul(acc, L[k].exp > 0 ? image(L[k].gen) : inverse_image(L[k].gen));
    return acc;
  }

  // sigma_n := tau sigma_{n-1} tau^-1 for a necklace assignment built from sigma_1..sigma_{n-1}, tau.
  void complete_sigma_n() {
    Gen sn = Gen::sigma(n_), sp = Gen::sigma(n_ - 1), t = Gen::tau();
    T img = Traits::mul(Traits::mul(image(t), image(sp)), inverse_image(t));
    T inv = Traits::mul(Traits::mul(image(t), inverse_image(sp)), inverse_image(t));
    assign_trusted(sn, std::move(img), std::move(inv));
  }

 private:
  const std::pair<T, T>& at(Gen g) const {
    auto it = images_.find(g);
    if (it == images_.end()) throw AlphabetMismatch("generator " + g.str() + " not assigned");
    return it->second;
  }
  std::string name_;
  int n_ = 0;
  std::optional<T> identity_;
  std::map<Gen, std::pair<T, T>> images_;
};

struct PairResult {
  std::string label, lhs, rhs;
  bool pass = false;
  std::optional<Witness> witness;
};

struct VerifyReport {
  std::string name;
  std::string relations;
  std::vector<PairResult> pairs;
  std::vector<std::string> notes;

  bool all_pass() const;
  size_t failures() const;
  const PairResult* first_failure() const;
  std::string to_json(int indent = 2) const;
  std::string summary() const;
};

template <class T>
VerifyReport verify(const RepAssignment<T>& rep, const RelationSet& rels) {
  std::string missing;
  for (auto& g : rels.generators())
    if (!rep.covers(g)) missing += " " + g.str();
  if (!missing.empty())
    throw AlphabetMismatch(rels.name + " uses generators not assigned by " + rep.name() + ":" + missing);
  VerifyReport rep_out;
  rep_out.name = rep.name();
  rep_out.relations = rels.name;
  rep_out.notes = rels.notes;
  for (auto& p : rels.pairs) {
    PairResult r{p.label, p.lhs.str(), p.rhs.str(), false, std::nullopt};
    T l = rep.eval(p.lhs), rr = rep.eval(p.rhs);
    r.pass = TargetTraits<T>::equal(l, rr);
    if (!r.pass) r.witness = TargetTraits<T>::witness(l, rr);
    rep_out.pairs.push_back(std::move(r));
  }
  return rep_out;
}

// sigma_i := tau^{i-1} sigma_1 tau^{1-i}.
template <class T>
RepAssignment<T> induced_assignment(const std::string& name, int n, const T& sigma1, const T& tau) {
  RepAssignment<T> rep(name, n);
  using Tr = TargetTraits<T>;
  rep.assign(Gen::tau(), tau);
  rep.assign(Gen::sigma(1), sigma1);
  for (int i = 2; i <= n; ++i) {
    const T& t = rep.image(Gen::tau());
    const T& ti = rep.inverse_image(Gen::tau());
    Gen prev = Gen::sigma(i - 1);
    rep.assign_trusted(Gen::sigma(i), Tr::mul(Tr::mul(t, rep.image(prev)), ti),
                       Tr::mul(Tr::mul(t, rep.inverse_image(prev)), ti));
  }
  return rep;
}

struct SufficiencyReport {
  bool result = false;      // reduced and full sets both pass
  bool equivalent = false;  // reduced passes iff full passes
  VerifyReport reduced, full;
};

template <class T>
SufficiencyReport reduced_set_sufficiency_check(const RepAssignment<T>& rep, bool circular = false) {
  int n = rep.n();
  SufficiencyReport s;
  s.reduced = verify(rep, circular ? circular_relations_reduced(n) : necklace_relations_reduced(n));
  s.full = verify(rep, circular ? circular_relations(n) : necklace_relations_full(n));
  s.result = s.reduced.all_pass() && s.full.all_pass();
  s.equivalent = s.reduced.all_pass() == s.full.all_pass();
  return s;
}

template <class T>
SufficiencyReport reduced_set_sufficiency_check(int n, const T& sigma1, const T& tau, bool circular = false) {
  return reduced_set_sufficiency_check(induced_assignment("induced", n, sigma1, tau), circular);
}

}  // namespace necklace
