#include "necklace/words.hpp"

#include <cctype>
#include <set>
#include <sstream>

#include "necklace/errors.hpp"

namespace necklace {

std::string alphabet_name(Alphabet a) {
  switch (a) {
    case Alphabet::Necklace: return "necklace";
    case Alphabet::Braid: return "braid";
    case Alphabet::Loop: return "loop";
    case Alphabet::Circular: return "circular";
  }
  return "?";
}

std::string Gen::str() const {
  switch (kind) {
    case GenKind::Sigma: return "sigma" + std::to_string(index);
    case GenKind::Tau: return "tau";
    case GenKind::G: return "g" + std::to_string(index);
    case GenKind::S: return "s" + std::to_string(index);
  }
  return "?";
}

GenWord::GenWord(Alphabet a, std::vector<Letter> letters) : alphabet_(a) {
  for (auto& l : letters) push(l);
}

void GenWord::push(Letter l) {
  if (!letters_.empty() && letters_.back().gen == l.gen && letters_.back().exp == -l.exp)
    letters_.pop_back();
  else
    letters_.push_back(l);
}

GenWord GenWord::gen(Alphabet a, Gen g, int exp) {
  GenWord w(a);
  for (int k = 0; k < std::abs(exp); ++k) w.push({g, exp > 0 ? 1 : -1});
  return w;
}

GenWord GenWord::parse(Alphabet a, const std::string& text) {
  GenWord w(a);
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;
    int exp = 1;
    auto caret = tok.find('^');
    std::string base = tok.substr(0, caret);
    if (caret != std::string::npos) {
      try {
        exp = std::stoi(tok.substr(caret + 1));
      } catch (...) {
        throw ParseError("bad exponent in '" + tok + "'");
      }
    }
    Gen g;
    auto split = [&](const std::string& prefix, GenKind k) {
      if (base.rfind(prefix, 0) != 0 || base.size() == prefix.size()) return false;
      std::string digits = base.substr(prefix.size());
      for (char c : digits)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
      g = {k, std::stoi(digits)};
      return g.index >= 1;
    };
    if (base == "tau") {
      g = Gen::tau();
    } else if (!split("sigma", GenKind::Sigma) && !split("g", GenKind::G) && !split("s", GenKind::S)) {
      throw ParseError("unknown generator '" + base + "'");
    }
    GenWord x = gen(a, g, exp);
    for (auto& l : x.letters_) w.push(l);
  }
  return w;
}

GenWord GenWord::operator*(const GenWord& o) const {
  GenWord w = *this;
  for (auto& l : o.letters_) w.push(l);
  return w;
}

GenWord GenWord::inverse() const {
  GenWord w(alphabet_);
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.push({it->gen, -it->exp});
  return w;
}

GenWord GenWord::pow(int k) const {
  GenWord base = k >= 0 ? *this : inverse();
  GenWord w(alphabet_);
  for (int i = 0; i < std::abs(k); ++i) w = w * base;
  return w;
}

std::vector<Gen> GenWord::generators() const {
  std::set<Gen> s;
  for (auto& l : letters_) s.insert(l.gen);
  return {s.begin(), s.end()};
}

std::string GenWord::str() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (size_t i = 0; i < letters_.size();) {
    size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
    int e = static_cast<int>(j - i) * letters_[i].exp;
    if (!out.empty()) out += ' ';
    out += letters_[i].gen.str();
    if (e != 1) out += "^" + std::to_string(e);
    i = j;
  }
  return out;
}

}  // namespace necklace
