#include "zeroseq/seq.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace zeroseq {

SignedSeq::SignedSeq(std::vector<int> values, int r, int s) : values_(std::move(values)), r_(r), s_(s) {
  if (r_ <= 0 || s_ <= 0) throw std::invalid_argument("SignedSeq: r and s must be positive");
  prefix_.resize(values_.size() + 1, 0);
  for (std::size_t i = 0; i < values_.size(); ++i) {
    int v = values_[i];
    if (v != -r_ && v != s_) throw std::invalid_argument("SignedSeq: value outside {-r, s}");
    prefix_[i + 1] = prefix_[i] + v;
  }
}

int SignedSeq::value(int pos) const {
  if (pos < 1 || pos > size()) throw std::out_of_range("SignedSeq::value: position out of range");
  return values_[static_cast<std::size_t>(pos) - 1];
}

long long SignedSeq::window_weight(int i, int k) const {
  if (k < 1 || i < 1 || i + k - 1 > size()) throw std::out_of_range("window_weight: window out of range");
  return prefix_[static_cast<std::size_t>(i) + k - 1] - prefix_[static_cast<std::size_t>(i) - 1];
}

long long SignedSeq::weight_of(std::span<const int> indices) const {
  long long w = 0;
  for (int pos : indices) w += value(pos);
  return w;
}

SignedSeq SignedSeq::negated() const {
  std::vector<int> neg(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) neg[i] = -values_[i];
  return SignedSeq(std::move(neg), s_, r_);
}

SignedSeq parse_seq(std::string_view text, int r, int s) {
  std::string body;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t eol = text.find('\n', start);
    std::string_view line = text.substr(start, eol == std::string_view::npos ? eol : eol - start);
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos && line[first] != '#') {
      body.append(line);
      body.push_back(' ');
    }
    if (eol == std::string_view::npos) break;
    start = eol + 1;
  }

  bool has_digit = false;
  for (char c : body) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      has_digit = true;
      break;
    }
  }

  std::vector<int> values;
  if (!has_digit) {
    for (char c : body) {
      if (c == '+') {
        values.push_back(s);
      } else if (c == '-') {
        values.push_back(-r);
      } else if (!std::isspace(static_cast<unsigned char>(c))) {
        throw std::invalid_argument(std::string("parse_seq: unexpected character '") + c + "'");
      }
    }
  } else {
    std::istringstream in{body};
    std::string tok;
    while (in >> tok) {
      int v = 0;
      try {
        std::size_t used = 0;
        v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw std::invalid_argument("parse_seq: bad token '" + tok + "'");
      }
      if (v != -r && v != s) throw std::invalid_argument("parse_seq: value outside {-r, s}: " + tok);
      values.push_back(v);
    }
  }
  if (values.empty()) throw std::invalid_argument("parse_seq: empty input");
  return SignedSeq(std::move(values), r, s);
}

std::string format_seq(const SignedSeq& f) {
  std::string out;
  if (f.is_pm1()) {
    out.reserve(f.values().size());
    for (int v : f.values()) out.push_back(v > 0 ? '+' : '-');
  } else {
    for (std::size_t i = 0; i < f.values().size(); ++i) {
      if (i) out.push_back(' ');
      out += std::to_string(f.values()[i]);
    }
  }
  return out;
}

bool witness_consistent(const BlockWitness& w, const SignedSeq& f) {
  if (w.indices.empty()) return false;
  for (std::size_t i = 0; i < w.indices.size(); ++i) {
    int pos = w.indices[i];
    if (pos < 1 || pos > f.size()) return false;
    if (i == 0) continue;
    int step = pos - w.indices[i - 1];
    if (step < 1) return false;
    switch (w.kind) {
      case BlockKind::Contiguous:
        if (step != 1) return false;
        break;
      case BlockKind::Gap:
        if (step > w.param) return false;
        break;
      case BlockKind::Arithmetic:
        if (step != w.param) return false;
        break;
    }
  }
  return f.weight_of(w.indices) == w.weight;
}

}  // namespace zeroseq
