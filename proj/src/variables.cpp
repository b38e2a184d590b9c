#include "necklace/variables.hpp"

#include <deque>
#include <mutex>
#include <unordered_map>

#include "necklace/errors.hpp"

namespace necklace {
namespace {

struct Registry {
  std::mutex mu;
  std::deque<std::string> names;  // deque: references stay valid
  std::unordered_map<std::string, int> ids;
};

Registry& registry() {
  static Registry r;
  return r;
}

bool valid_name(std::string_view s) {
  if (s.empty() || s == "zeta") return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
  if (!alpha(s[0])) return false;
  for (char c : s)
    if (!alpha(c) && !(c >= '0' && c <= '9')) return false;
  return true;
}

int insert_locked(Registry& r, const std::string& name) {
  int id = static_cast<int>(r.names.size());
  r.names.push_back(name);
  r.ids.emplace(name, id);
  return id;
}

}  // namespace

int var_id(std::string_view name) {
  auto& r = registry();
  std::lock_guard lock(r.mu);
  auto it = r.ids.find(std::string(name));
  if (it != r.ids.end()) return it->second;
  if (!valid_name(name)) throw ParseError("invalid variable name '" + std::string(name) + "'");
  return insert_locked(r, std::string(name));
}

const std::string& var_name(int id) {
  auto& r = registry();
  std::lock_guard lock(r.mu);
  return r.names.at(static_cast<size_t>(id));
}

int var_count() {
  auto& r = registry();
  std::lock_guard lock(r.mu);
  return static_cast<int>(r.names.size());
}

bool var_known(std::string_view name) {
  auto& r = registry();
  std::lock_guard lock(r.mu);
  return r.ids.count(std::string(name)) > 0;
}

int fresh_var(std::string_view base) {
  auto& r = registry();
  std::lock_guard lock(r.mu);
  for (int k = 1;; ++k) {
    std::string cand = std::string(base) + "_" + std::to_string(k);
    if (!r.ids.count(cand)) return insert_locked(r, cand);
  }
}

}  // namespace necklace
