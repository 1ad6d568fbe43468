#pragma once

// Curve words in the letters P (puncture through an arc) and S (passage
// through a saddle channel), their canonical forms, and the standard-position
// constraints on words and configurations.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "surfenum/dualgraph.hpp"

namespace surfenum {

struct Letter {
  LetterKind kind = LetterKind::P;
  int ref = 0;  // arc id for P, SaddleChannel::index() for S

  static Letter P(int arc) { return {LetterKind::P, arc}; }
  static Letter S(SaddleChannel ch) { return {LetterKind::S, ch.index()}; }

  bool is_p() const { return kind == LetterKind::P; }
  bool is_s() const { return kind == LetterKind::S; }
  int arc() const { return ref; }
  SaddleChannel channel() const { return SaddleChannel::from_index(ref); }

  // P < S; P by arc id; S by (crossing, channel).
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

// A closed walk in the dual graph: faces[i] is the face before letters[i],
// letters[i] leads to faces[(i+1) % size]. Cyclic, unoriented.
struct CurveWord {
  std::vector<Letter> letters;
  std::vector<int> faces;

  int length() const { return static_cast<int>(letters.size()); }
  int p_count() const;
  int s_count() const;

  friend auto operator<=>(const CurveWord&, const CurveWord&) = default;
};

// Minimal representative over all rotations and the reversal.
using CanonicalWord = CurveWord;

CanonicalWord canonicalize(const CurveWord& w);

// "P1 S3A P4 S5B": 1-based arc labels and crossing ids.
std::string serialize_word(const CurveWord& w);
std::vector<Letter> parse_word_letters(std::string_view text);

// "PSPS", "PPPP", ...; the skeleton of the canonical form.
std::string word_pattern(const CurveWord& w);

// True when the face trace is a closed walk of the given graph spelling the letters.
bool is_consistent_walk(const AugmentedDualGraph& g, const CurveWord& w);

// Property numbers follow the standard-position list:
//   2  same saddle (crossing) twice          6  saddle next to an adjacent arc
//   3  innermost curve with successive S's  7  word of the form P^i S^j, j > 0
//   4  saddle sides unbalanced              8  fewer than two P's
//   5  successive P's on the same arc       9  length below four, or odd
struct Violation {
  int property = 0;
  int position = 0;  // letter index (word checks) or crossing id (balance)
  std::string detail;
  friend bool operator==(const Violation&, const Violation&) = default;
};

// Word-level checks (2), (5)-(9). Only the letters and diagram adjacency are
// consulted, so the face trace need not be present.
std::vector<Violation> check_word(const AugmentedDualGraph& g, const CurveWord& w);

// Property (3) for a curve known to be innermost.
std::vector<Violation> check_innermost(const CurveWord& w);

struct Configuration {
  std::vector<CurveWord> words_plus;
  std::vector<CurveWord> words_minus;

  int puncture_count() const;      // P letters on S+
  int saddle_letter_count() const; // S letters on S+
  int curve_count() const { return static_cast<int>(words_plus.size() + words_minus.size()); }

  friend auto operator<=>(const Configuration&, const Configuration&) = default;
};

// Mirror convention: every S+ curve is paired with a curve on S- carrying the
// same letters. Sorts words_plus canonically.
Configuration make_mirrored(std::vector<CurveWord> words_plus);

// Balance (4) on each sphere; with innermost_rule, (3) for every S+ word.
std::vector<Violation> check_configuration(const Configuration& cfg, int crossing_count, bool innermost_rule = false);

int complexity(const Configuration& cfg);

enum class Family { Pppp, PspsPair, Other };
Family classify(const Configuration& cfg);
std::string_view family_name(Family f);

}  // namespace surfenum
