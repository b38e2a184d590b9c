#include "necklace/loop_actions.hpp"

#include "necklace/classical_reps.hpp"
#include "necklace/local_reps.hpp"

namespace necklace {

FreeWord FreeWord::gen(int i, int exp) {
  FreeWord w;
  for (int k = 0; k < std::abs(exp); ++k) w.push({i, exp > 0 ? 1 : -1});
  return w;
}

void FreeWord::push(std::pair<int, int> l) {
  if (!letters_.empty() && letters_.back().first == l.first && letters_.back().second == -l.second)
    letters_.pop_back();
  else
    letters_.push_back(l);
}

FreeWord FreeWord::operator*(const FreeWord& o) const {
  FreeWord r = *this;
  for (auto& l : o.letters_) r.push(l);
  return r;
}

FreeWord FreeWord::inverse() const {
  FreeWord r;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) r.push({it->first, -it->second});
  return r;
}

bool FreeWord::is_conjugate_of_generator(int* j) const {
  size_t L = letters_.size();
  if (L % 2 == 0) return false;
  size_t k = L / 2;
  for (size_t p = 0; p < k; ++p) {
    auto a = letters_[p], b = letters_[L - 1 - p];
    if (a.first != b.first || a.second != -b.second) return false;
  }
  if (letters_[k].second != 1) return false;
  if (j) *j = letters_[k].first;
  return true;
}

std::string FreeWord::str() const {
  if (letters_.empty()) return "1";
  std::string s;
  for (auto& [i, e] : letters_) {
    if (!s.empty()) s += " ";
    s += "x" + std::to_string(i) + (e < 0 ? "^-1" : "");
  }
  return s;
}

FreeAut FreeAut::identity(int n) {
  FreeAut a;
  a.n = n;
  for (int i = 1; i <= n; ++i) a.images.push_back(FreeWord::gen(i));
  a.inverse_images = a.images;
  return a;
}

FreeAut FreeAut::make(int n, std::vector<FreeWord> images, std::vector<FreeWord> inverse_images) {
  if (static_cast<int>(images.size()) != n || static_cast<int>(inverse_images.size()) != n)
    throw std::invalid_argument("automorphism needs one image per generator");
  FreeAut f{n, std::move(images), std::move(inverse_images)};
  FreeAut fwd{n, f.images, f.images}, back{n, f.inverse_images, f.inverse_images};
  if (!aut_compose(fwd, back).is_identity() || !aut_compose(back, fwd).is_identity())
    throw std::invalid_argument("inverse images do not invert the automorphism");
  return f;
}

FreeWord FreeAut::apply(const FreeWord& w, size_t limit) const {
  FreeWord r;
  for (auto& [i, e] : w.letters()) {
    r = r * (e > 0 ? images[i - 1] : images[i - 1].inverse());
    if (r.length() > limit) throw WordTooLong("image length exceeds " + std::to_string(limit));
  }
  return r;
}

bool FreeAut::is_identity() const {
  for (int i = 1; i <= n; ++i)
    if (!(images[i - 1] == FreeWord::gen(i))) return false;
  return true;
}

bool FreeAut::is_conjugating() const {
  std::vector<bool> hit(n + 1, false);
  for (auto& w : images) {
    int j = 0;
    if (!w.is_conjugate_of_generator(&j) || hit[j]) return false;
    hit[j] = true;
  }
  return true;
}

std::string FreeAut::str() const {
  std::string s;
  for (int i = 1; i <= n; ++i) s += "x" + std::to_string(i) + " -> " + images[i - 1].str() + "\n";
  return s;
}

FreeAut aut_compose(const FreeAut& f, const FreeAut& g, size_t limit) {
  if (f.n != g.n) throw std::invalid_argument("composing automorphisms of different rank");
  FreeAut r;
  r.n = f.n;
  for (auto& w : g.images) r.images.push_back(f.apply(w, limit));
  // (f o g)^-1 = g^-1 o f^-1
  FreeAut gi = g.inverse();
  for (auto& w : f.inverse_images) r.inverse_images.push_back(gi.apply(w, limit));
  return r;
}

FreeAut aut_g(int n, int i) {
  if (i < 1 || i >= n) throw std::invalid_argument("g_i needs 1 <= i < n");
  FreeAut a = FreeAut::identity(n);
  auto x = [](int k, int e = 1) { return FreeWord::gen(k, e); };
  a.images[i - 1] = x(i + 1);
  a.images[i] = x(i + 1, -1) * x(i) * x(i + 1);
  a.inverse_images[i - 1] = x(i) * x(i + 1) * x(i, -1);
  a.inverse_images[i] = x(i);
  return FreeAut::make(n, a.images, a.inverse_images);
}

FreeAut aut_s(int n, int i) {
  if (i < 1 || i >= n) throw std::invalid_argument("s_i needs 1 <= i < n");
  FreeAut a = FreeAut::identity(n);
  std::swap(a.images[i - 1], a.images[i]);
  a.inverse_images = a.images;
  return FreeAut::make(n, a.images, a.inverse_images);
}

Witness TargetTraits<FreeAut>::witness(const FreeAut& a, const FreeAut& b) {
  Witness w;
  for (int i = 0; i < a.n; ++i)
    if (!(a.images[i] == b.images[i])) {
      w.basis_index = i;
      w.description = "images of x" + std::to_string(i + 1) + " differ";
      w.lhs_image = {a.images[i].str()};
      w.rhs_image = {b.images[i].str()};
      break;
    }
  return w;
}

RepAssignment<FreeAut> lb_generators(int n) {
  if (n < 2) throw std::invalid_argument("LB_n needs n >= 2");
  RepAssignment<FreeAut> rep("conjugating automorphisms of F_" + std::to_string(n), n);
  for (int i = 1; i < n; ++i) {
    rep.assign(Gen::g(i), aut_g(n, i));
    rep.assign(Gen::s(i), aut_s(n, i));
  }
  return rep;
}

VerifyReport lb_check(int n) { return verify(lb_generators(n), loop_braid_relations(n)); }

RepAssignment<FreeAut> zeta(int n) {
  auto lb = lb_generators(n);
  RepAssignment<FreeAut> rep("zeta into LB_" + std::to_string(n), n);
  for (int i = 1; i < n; ++i) rep.assign(Gen::sigma(i), lb.image(Gen::g(i)));
  GenWord p(Alphabet::Loop);
  for (int i = 1; i < n; ++i) p = p * GenWord::gen(Alphabet::Loop, Gen::s(i));
  FreeAut pa = lb.eval(p);
  rep.assign(Gen::tau(), pa, pa.inverse());
  rep.complete_sigma_n();
  return rep;
}

IdentityReport zeta_suite(int n) {
  IdentityReport r;
  r.name = "zeta: NB_" + std::to_string(n) + " -> LB_" + std::to_string(n);
  for (auto& p : lb_check(n).pairs) r.add("LB " + p.label, p.pass, p.pass ? "" : p.witness->description);
  auto z = zeta(n);
  for (auto& p : verify(z, necklace_relations_full(n)).pairs) r.add("NB " + p.label, p.pass, p.pass ? "" : p.witness->description);
  auto br = verify(z, braid_relations(n));
  r.add("zeta on sigma_1..sigma_{n-1} satisfies the braid relations", br.all_pass());
  bool conj = true;
  for (auto g : z.generators()) conj = conj && z.image(g).is_conjugating() && z.inverse_image(g).is_conjugating();
  r.add("every image is a conjugating automorphism", conj);
  return r;
}

namespace {

void central_check(IdentityReport& r, const std::string& name, const RepAssignment<Matrix>& rep, int n) {
  Matrix T = rep.image(Gen::tau()).pow(n);
  bool central = true;
  for (auto g : rep.generators()) central = central && commute(T, rep.image(g));
  r.add(name + ": rho(tau^n) is central", central, T.is_identity() ? "rho(tau^n) = I" : "rho(tau^n) != I");
}

}  // namespace

IdentityReport zeta_kernel_check(int n) {
  IdentityReport r;
  r.name = "kernel of zeta, n = " + std::to_string(n);
  auto z = zeta(n);
  GenWord tn = GenWord::gen(Alphabet::Necklace, Gen::tau(), 1).pow(n);
  r.add("zeta(tau^n) = id", z.eval(tn).is_identity());
  int ord = 1;
  FreeAut p = z.image(Gen::tau());
  while (!p.is_identity() && ord <= 2 * n) {
    p = aut_compose(z.image(Gen::tau()), p);
    ++ord;
  }
  r.add("order of zeta(tau) divides n", n % ord == 0, "order " + std::to_string(ord));
  central_check(r, "symmetric model", symmetric_model(n).assignment(), n);
  central_check(r, "standard rep standard extension", standard_extension(standard_rep(n, Scalar::var("z"))).assignment(), n);
  central_check(r, "reduced Burau standard extension", standard_extension(burau_reduced(n, Scalar::var("t"))).assignment(), n);
  if (n >= 3 && n <= 5) central_check(r, "Ising cyclic shift", local_necklace_rep(bvs_ising(), n).assignment(), n);
  if (n >= 3 && n <= 4) central_check(r, "Psi o phi_hat NES(2,n)", nes_matrix_model(2, n).local_rep(), n);
  return r;
}

}  // namespace necklace
