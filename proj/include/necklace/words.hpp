#pragma once

#include <compare>
#include <string>
#include <vector>

namespace necklace {

enum class GenKind { Sigma, Tau, G, S };
enum class Alphabet { Necklace, Braid, Loop, Circular };

std::string alphabet_name(Alphabet a);

struct Gen {
  GenKind kind = GenKind::Sigma;
  int index = 0;  // 1-based; unused for Tau
  auto operator<=>(const Gen&) const = default;
  static Gen sigma(int i) { return {GenKind::Sigma, i}; }
  static Gen tau() { return {GenKind::Tau, 0}; }
  static Gen g(int i) { return {GenKind::G, i}; }
  static Gen s(int i) { return {GenKind::S, i}; }
  std::string str() const;  // sigma3, tau, g2, s1
};

struct Letter {
  Gen gen;
  int exp = 1;  // +1 or -1
  bool operator==(const Letter&) const = default;
};

// Freely reduced word in abstract generators.
class GenWord {
 public:
  GenWord() = default;
  explicit GenWord(Alphabet a) : alphabet_(a) {}
  GenWord(Alphabet a, std::vector<Letter> letters);

  static GenWord gen(Alphabet a, Gen g, int exp = 1);
  // Parses "sigma1 tau^-1 g2 s3^2"; "1" or "" is the empty word.
  static GenWord parse(Alphabet a, const std::string& text);

  Alphabet alphabet() const { return alphabet_; }
  const std::vector<Letter>& letters() const { return letters_; }
  size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  GenWord operator*(const GenWord& o) const;
  GenWord inverse() const;
  GenWord pow(int k) const;
  bool operator==(const GenWord& o) const { return letters_ == o.letters_; }

  std::vector<Gen> generators() const;
  std::string str() const;

 private:
  void push(Letter l);
  Alphabet alphabet_ = Alphabet::Necklace;
  std::vector<Letter> letters_;
};

}  // namespace necklace
