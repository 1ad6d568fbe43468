#include "surfenum/words.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "surfenum/errors.hpp"

namespace surfenum {

namespace {

std::string letter_text(const Letter& l) {
  if (l.is_p()) return "P" + std::to_string(l.arc() + 1);
  const auto ch = l.channel();
  return "S" + std::to_string(ch.crossing + 1) + (ch.side == Channel::A ? "A" : "B");
}

}  // namespace

int CurveWord::p_count() const {
  return static_cast<int>(std::count_if(letters.begin(), letters.end(), [](const Letter& l) { return l.is_p(); }));
}

int CurveWord::s_count() const { return length() - p_count(); }

CanonicalWord canonicalize(const CurveWord& w) {
  const int k = w.length();
  if (k == 0) return w;
  const bool has_faces = !w.faces.empty();
  // Candidate (reverse, shift) reads letter i from index (shift + i) of the
  // base word; the reversed base has letters[k-1-j] and faces[(k-j) % k].
  const auto letter = [&](bool rev, int shift, int i) -> const Letter& {
    const int j = (shift + i) % k;
    return w.letters[rev ? k - 1 - j : j];
  };
  const auto face = [&](bool rev, int shift, int i) {
    const int j = (shift + i) % k;
    return w.faces[rev ? (k - j) % k : j];
  };
  const auto less = [&](bool ra, int sa, bool rb, int sb) {
    for (int i = 0; i < k; ++i) {
      const auto c = letter(ra, sa, i) <=> letter(rb, sb, i);
      if (c != 0) return c < 0;
    }
    if (!has_faces) return false;
    for (int i = 0; i < k; ++i) {
      const int fa = face(ra, sa, i), fb = face(rb, sb, i);
      if (fa != fb) return fa < fb;
    }
    return false;
  };
  bool best_rev = false;
  int best_shift = 0;
  for (const bool rev : {false, true})
    for (int shift = 0; shift < k; ++shift)
      if (less(rev, shift, best_rev, best_shift)) {
        best_rev = rev;
        best_shift = shift;
      }
  CurveWord out;
  out.letters.reserve(k);
  for (int i = 0; i < k; ++i) out.letters.push_back(letter(best_rev, best_shift, i));
  if (has_faces) {
    out.faces.reserve(k);
    for (int i = 0; i < k; ++i) out.faces.push_back(face(best_rev, best_shift, i));
  }
  return out;
}

std::string serialize_word(const CurveWord& w) {
  std::string out;
  for (const auto& l : w.letters) {
    if (!out.empty()) out += ' ';
    out += letter_text(l);
  }
  return out;
}

std::vector<Letter> parse_word_letters(std::string_view text) {
  const auto label = [](const std::string& tok, std::string_view digits) {
    int v = 0;
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (ec != std::errc{} || end != digits.data() + digits.size() || v < 1) throw ParseError("bad letter '" + tok + "'");
    return v - 1;
  };
  std::vector<Letter> letters;
  std::istringstream in{std::string(text)};
  for (std::string tok; in >> tok;) {
    const std::string_view body(tok);
    if (tok.size() >= 2 && tok[0] == 'P') {
      letters.push_back(Letter::P(label(tok, body.substr(1))));
    } else if (tok.size() >= 3 && tok[0] == 'S') {
      const char side = tok.back();
      if (side != 'A' && side != 'B') throw ParseError("saddle letter needs channel A or B: '" + tok + "'");
      letters.push_back(Letter::S({label(tok, body.substr(1, tok.size() - 2)), side == 'A' ? Channel::A : Channel::B}));
    } else {
      throw ParseError("bad letter '" + tok + "'");
    }
  }
  return letters;
}

std::string word_pattern(const CurveWord& w) {
  std::string skeleton;
  for (const auto& l : w.letters) skeleton += l.is_p() ? 'P' : 'S';
  if (skeleton.empty()) return skeleton;
  std::string best = skeleton;
  std::string rev(skeleton.rbegin(), skeleton.rend());
  for (const std::string* base : {&skeleton, &rev})
    for (std::size_t s = 0; s < base->size(); ++s) best = std::min(best, base->substr(s) + base->substr(0, s));
  return best;
}

bool is_consistent_walk(const AugmentedDualGraph& g, const CurveWord& w) {
  const int k = w.length();
  if (k == 0 || static_cast<int>(w.faces.size()) != k) return false;
  for (int i = 0; i < k; ++i) {
    const int from = w.faces[i];
    const int to = w.faces[(i + 1) % k];
    if (from < 0 || from >= g.node_count()) return false;
    const auto& steps = g.steps_from(from);
    const bool found = std::any_of(steps.begin(), steps.end(), [&](const Step& s) {
      return s.kind == w.letters[i].kind && s.ref == w.letters[i].ref && s.dest == to;
    });
    if (!found) return false;
  }
  return true;
}

std::vector<Violation> check_word(const AugmentedDualGraph& g, const CurveWord& w) {
  std::vector<Violation> out;
  const auto& letters = w.letters;
  const int k = w.length();
  const Diagram& d = g.diagram();

  std::map<int, int> first_use;
  for (int i = 0; i < k; ++i) {
    if (!letters[i].is_s()) continue;
    const int c = letters[i].channel().crossing;
    auto [it, fresh] = first_use.emplace(c, i);
    if (!fresh)
      out.push_back({2, i, "crossing " + std::to_string(c + 1) + " already used at letter " + std::to_string(it->second)});
  }

  if (k >= 2) {
    for (int i = 0; i < k; ++i) {
      const Letter& a = letters[i];
      const Letter& b = letters[(i + 1) % k];
      if (a.is_p() && b.is_p() && a.arc() == b.arc())
        out.push_back({5, i, "successive punctures on arc " + std::to_string(a.arc() + 1)});
      if (a.is_p() != b.is_p()) {
        const Letter& p = a.is_p() ? a : b;
        const Letter& s = a.is_p() ? b : a;
        if (d.arc_touches_crossing(p.arc(), s.channel().crossing))
          out.push_back({6, i, "arc " + std::to_string(p.arc() + 1) + " is adjacent to saddle at crossing " +
                                   std::to_string(s.channel().crossing + 1)});
      }
    }
  }

  const int p = w.p_count();
  const int s = k - p;
  if (s > 0) {
    int runs = 0;
    int run_start = 0;
    for (int i = 0; i < k; ++i)
      if (letters[i].is_s() && letters[(i + k - 1) % k].is_p()) {
        ++runs;
        run_start = i;
      }
    if (p == 0 || runs == 1)
      out.push_back({7, run_start, "word has the form P^" + std::to_string(p) + " S^" + std::to_string(s)});
  }

  if (p < 2) out.push_back({8, 0, "only " + std::to_string(p) + " puncture(s)"});
  if (k < 4) out.push_back({9, 0, "length " + std::to_string(k) + " is below four"});
  if (k % 2 != 0) out.push_back({9, 0, "length " + std::to_string(k) + " is odd"});
  return out;
}

std::vector<Violation> check_innermost(const CurveWord& w) {
  std::vector<Violation> out;
  const int k = w.length();
  if (k < 2) return out;
  for (int i = 0; i < k; ++i)
    if (w.letters[i].is_s() && w.letters[(i + 1) % k].is_s())
      out.push_back({3, i, "innermost curve passes two successive saddles"});
  return out;
}

int Configuration::puncture_count() const {
  int total = 0;
  for (const auto& w : words_plus) total += w.p_count();
  return total;
}

int Configuration::saddle_letter_count() const {
  int total = 0;
  for (const auto& w : words_plus) total += w.s_count();
  return total;
}

Configuration make_mirrored(std::vector<CurveWord> words_plus) {
  std::sort(words_plus.begin(), words_plus.end());
  Configuration cfg;
  cfg.words_minus = words_plus;
  cfg.words_plus = std::move(words_plus);
  return cfg;
}

std::vector<Violation> check_configuration(const Configuration& cfg, int crossing_count, bool innermost_rule) {
  std::vector<Violation> out;
  for (const auto* sphere : {&cfg.words_plus, &cfg.words_minus}) {
    std::vector<int> balance(crossing_count, 0);
    for (const auto& w : *sphere)
      for (const auto& l : w.letters)
        if (l.is_s()) balance[l.channel().crossing] += l.channel().side == Channel::A ? 1 : -1;
    for (int c = 0; c < crossing_count; ++c)
      if (balance[c] != 0)
        out.push_back({4, c, "sides of the saddle at crossing " + std::to_string(c + 1) + " are used unequally"});
  }
  if (innermost_rule)
    for (const auto& w : cfg.words_plus) {
      auto v = check_innermost(w);
      out.insert(out.end(), v.begin(), v.end());
    }
  return out;
}

int complexity(const Configuration& cfg) {
  return cfg.puncture_count() + cfg.saddle_letter_count() + cfg.curve_count();
}

Family classify(const Configuration& cfg) {
  if (cfg.words_plus.size() == 1 && word_pattern(cfg.words_plus[0]) == "PPPP") return Family::Pppp;
  if (cfg.words_plus.size() == 2 && word_pattern(cfg.words_plus[0]) == "PSPS" &&
      word_pattern(cfg.words_plus[1]) == "PSPS")
    return Family::PspsPair;
  return Family::Other;
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Pppp: return "pppp";
    case Family::PspsPair: return "psps_pair";
    case Family::Other: return "other";
  }
  return "other";
}

}  // namespace surfenum
