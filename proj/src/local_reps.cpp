#include "necklace/local_reps.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace necklace {

namespace {
size_t site_dim_of(const Matrix& R) {
  size_t d = R.dim(), m = 1;
  while (m * m < d) ++m;
  if (m * m != d) throw std::invalid_argument("R dimension is not a perfect square");
  return m;
}
}  // namespace

Matrix flip_operator(size_t m) {
  std::vector<size_t> img(m * m);
  for (size_t a = 0; a < m; ++a)
    for (size_t b = 0; b < m; ++b) img[a * m + b] = b * m + a;
  return Matrix::permutation(img);
}

YbeResult ybe_check(const Matrix& R) {
  size_t m = site_dim_of(R);
  Matrix I = Matrix::identity(m);
  Matrix A = kron(R, I), B = kron(I, R);
  Matrix lhs = A * B * A, rhs = B * A * B;
  YbeResult r;
  r.holds = lhs == rhs;
  if (!r.holds) r.witness = TargetTraits<Matrix>::witness(lhs, rhs);
  return r;
}

BVS make_bvs(std::string name, const Matrix& R) {
  BVS b;
  b.name = std::move(name);
  b.m = site_dim_of(R);
  b.R = R;
  b.R_inv = R.inverse();
  if (!ybe_check(R).holds) throw std::invalid_argument("R does not satisfy the Yang-Baxter equation");
  return b;
}

BVS bvs_ising() {
  Scalar h = (Scalar::root_of_unity(8, 1) + Scalar::root_of_unity(8, 7)) * Scalar::rational(1, 2);
  Scalar z(0);
  return make_bvs("ising", Matrix::from_rows({{h, z, z, h}, {z, h, -h, z}, {z, h, h, z}, {-h, z, z, h}}));
}

BVS bvs_flip(size_t m) { return make_bvs("flip", flip_operator(m)); }
BVS bvs_identity(size_t m) { return make_bvs("identity", Matrix::identity(m * m)); }

BVS bvs_catalog(const std::string& name) {
  if (name == "ising") return bvs_ising();
  if (name == "flip") return bvs_flip();
  if (name == "identity") return bvs_identity();
  throw std::invalid_argument("unknown BVS '" + name + "' (catalog: ising, flip, identity)");
}

BVS bvs_from_json(const std::string& text, const std::string& name) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw ConfigParseError(std::string("BVS file: ") + e.what());
  }
  if (!j.contains("R") || !j["R"].is_array()) throw ConfigParseError("BVS file needs an \"R\" array");
  std::vector<std::vector<std::string>> rows;
  for (auto& row : j["R"]) {
    std::vector<std::string> r;
    for (auto& e : row) r.push_back(e.is_string() ? e.get<std::string>() : e.dump());
    rows.push_back(std::move(r));
  }
  BVS b = make_bvs(j.value("name", name), Matrix::parse_rows(rows));
  if (j.contains("m") && j["m"].get<size_t>() != b.m) throw ConfigParseError("BVS file: m does not match R");
  return b;
}

BVS bvs_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigParseError("cannot open BVS file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return bvs_from_json(ss.str(), path);
}

int shift_order(size_t m, int n) {
  Matrix X = materialize(LocalOperator::shift(m, n));
  Matrix acc = X;
  for (int k = 1; k <= 4 * n; ++k) {
    if (acc.is_identity()) return k;
    acc = acc * X;
  }
  return -1;
}

NecklaceExtension local_necklace_rep(const BVS& bvs, int n, size_t budget) {
  if (n < 3) throw std::invalid_argument("the cyclic-shift extension needs n >= 3");
  std::vector<Matrix> s, si;
  for (int i = 1; i < n; ++i) {
    s.push_back(materialize(LocalOperator::block(bvs.R, bvs.m, n, i), budget));
    si.push_back(materialize(LocalOperator::block(bvs.R_inv, bvs.m, n, i), budget));
  }
  BraidRep base;
  base.name = "local " + bvs.name;
  base.n = n;
  base.sigma = std::move(s);
  base.sigma_inv = std::move(si);
  Matrix X = materialize(LocalOperator::shift(bvs.m, n), budget);
  auto ext = make_extension("local " + bvs.name + " cyclic shift", "nonstandard", std::move(base), X, X.transpose());
  int ord = shift_order(bvs.m, n);
  ext.values["tau_order"] = std::to_string(ord);
  ext.flags["tau_order_n"] = ord == n;
  return ext;
}

bool key_identity_on_pure_tensors(const BVS& bvs) {
  size_t m = bvs.m;
  Matrix X = materialize(LocalOperator::shift(m, 3));
  Matrix lhs = X * kron(bvs.R, Matrix::identity(m)) * X.transpose();
  Matrix rhs = kron(Matrix::identity(m), bvs.R);
  for (size_t a = 0; a < m * m * m; ++a) {
    Vector e(m * m * m, Scalar(0));
    e[a] = Scalar(1);
    if (lhs.apply(e) != rhs.apply(e)) return false;
  }
  return true;
}

N2SymmetricResult n2_symmetric_extension(const Matrix& R) {
  size_t m = site_dim_of(R);
  Matrix P = flip_operator(m);
  N2SymmetricResult r;
  r.symmetric = P * R * P == R;
  BraidRep base = make_braid_rep("n=2 flip", 2, {R});
  auto ext = make_extension("n=2 flip tau", "nonstandard", base, P, P);
  r.report = ext.verify_full();
  r.passes = r.report.all_pass();
  if (auto* f = r.report.first_failure()) r.failure = *f;
  auto a = ext.assignment();
  Vector e(m * m, Scalar(0));
  e[m] = Scalar(1);
  r.braid_lhs_e21 = a.eval(GenWord::parse(Alphabet::Necklace, "sigma1 sigma2 sigma1")).apply(e);
  r.braid_rhs_e21 = a.eval(GenWord::parse(Alphabet::Necklace, "sigma2 sigma1 sigma2")).apply(e);
  return r;
}

ConjectureReport conjecture_ratio(const BVS& bvs, int n, const ClosureOptions& opts) {
  if (!bvs.R.is_constant()) throw NonCyclotomicEntries("BVS entries must be cyclotomic numbers");
  auto ext = local_necklace_rep(bvs, n);
  std::vector<Matrix> b = ext.base.sigma;
  std::vector<Matrix> aff = b;
  aff.push_back(ext.sigma_n);
  std::vector<Matrix> nb = aff;
  nb.push_back(ext.tau);
  auto with = [&](const char* suffix) {
    ClosureOptions o = opts;
    if (!o.checkpoint.empty()) o.checkpoint += suffix;
    return o;
  };
  ConjectureReport r;
  r.n = n;
  r.braid = group_closure(b, with(".B"));
  r.affine = group_closure(aff, with(".affine"));
  r.necklace = group_closure(nb, with(".NB"));
  r.expected_factor = static_cast<size_t>(n) << n;
  bool complete = r.braid.complete && r.affine.complete && r.necklace.complete;
  r.ratio_nb_over_b = complete && r.necklace.order == r.expected_factor * r.braid.order;
  r.ratio_nb_over_affine = complete && r.necklace.order == static_cast<size_t>(n) * r.affine.order;
  r.verdict = r.ratio_nb_over_b && r.ratio_nb_over_affine;
  return r;
}

std::string ConjectureReport::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  auto run = [](const ClosureResult& c) {
    nlohmann::ordered_json e;
    e["order"] = c.order;
    e["generator_count"] = c.generator_count;
    e["wall_time"] = c.wall_time;
    e["complete"] = c.complete;
    return e;
  };
  j["order_B"] = run(braid);
  j["order_affine"] = run(affine);
  j["order_NB"] = run(necklace);
  j["expected_factor"] = expected_factor;
  if (braid.order) j["ratio_NB_over_B"] = double(necklace.order) / double(braid.order);
  if (affine.order) j["ratio_NB_over_affine"] = double(necklace.order) / double(affine.order);
  j["verdict"] = verdict;
  return j.dump(2);
}

}  // namespace necklace
