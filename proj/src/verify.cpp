#include "necklace/verify.hpp"

#include <json.hpp>

namespace necklace {

Witness TargetTraits<Matrix>::witness(const Matrix& a, const Matrix& b) {
  Witness w;
  if (a.dim() != b.dim()) {
    w.description = "dimension mismatch";
    return w;
  }
  for (size_t j = 0; j < a.dim(); ++j) {
    bool differ = false;
    for (size_t i = 0; i < a.dim() && !differ; ++i) differ = !(a(i, j) == b(i, j));
    if (!differ) continue;
    w.basis_index = static_cast<long>(j);
    w.description = "images of basis vector " + std::to_string(j) + " differ";
    for (size_t i = 0; i < a.dim(); ++i) {
      w.lhs_image.push_back(a(i, j).str());
      w.rhs_image.push_back(b(i, j).str());
    }
    return w;
  }
  return w;
}

bool VerifyReport::all_pass() const { return failures() == 0; }

size_t VerifyReport::failures() const {
  size_t k = 0;
  for (auto& p : pairs) k += !p.pass;
  return k;
}

const PairResult* VerifyReport::first_failure() const {
  for (auto& p : pairs)
    if (!p.pass) return &p;
  return nullptr;
}

std::string VerifyReport::to_json(int indent) const {
  nlohmann::ordered_json j;
  j["name"] = name;
  j["relations"] = relations;
  j["pairs"] = nlohmann::ordered_json::array();
  for (auto& p : pairs) {
    nlohmann::ordered_json e;
    e["label"] = p.label;
    e["lhs"] = p.lhs;
    e["rhs"] = p.rhs;
    e["status"] = p.pass ? "pass" : "fail";
    if (p.witness) {
      e["witness"]["description"] = p.witness->description;
      if (p.witness->basis_index >= 0) e["witness"]["basis_index"] = p.witness->basis_index;
      e["witness"]["lhs"] = p.witness->lhs_image;
      e["witness"]["rhs"] = p.witness->rhs_image;
    }
    j["pairs"].push_back(e);
  }
  if (!notes.empty()) j["notes"] = notes;
  return j.dump(indent);
}

std::string VerifyReport::summary() const {
  std::string s = name + " vs " + relations + ": " + std::to_string(pairs.size() - failures()) + "/" +
                  std::to_string(pairs.size()) + " pass";
  if (auto* f = first_failure()) s += " (first failure " + f->label + ")";
  return s;
}

}  // namespace necklace
