#include "catconv/path.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "catconv/errors.hpp"

namespace catconv {

std::size_t Path::up_count() const noexcept {
  return static_cast<std::size_t>(std::count(steps_.begin(), steps_.end(), Step::Up));
}

std::vector<int> Path::heights() const {
  std::vector<int> h(steps_.size() + 1, 0);
  for (std::size_t t = 0; t < steps_.size(); ++t) h[t + 1] = h[t] + delta(steps_[t]);
  return h;
}

int Path::final_height() const noexcept {
  int h = 0;
  for (Step s : steps_) h += delta(s);
  return h;
}

Path Path::slice(std::size_t from, std::size_t to) const {
  return Path(std::vector<Step>(steps_.begin() + static_cast<std::ptrdiff_t>(from),
                                steps_.begin() + static_cast<std::ptrdiff_t>(to)));
}

std::string Path::str() const {
  std::string s;
  s.reserve(steps_.size());
  for (Step step : steps_) s.push_back(to_char(step));
  return s;
}

std::ostream& operator<<(std::ostream& os, const Path& p) { return os << p.str(); }

Path parse_path(std::string_view text) {
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'U': steps.push_back(Step::Up); break;
      case 'D': steps.push_back(Step::Down); break;
      default: throw ParseError(std::string("invalid step character '") + text[i] + "'", i);
    }
  }
  return Path(std::move(steps));
}

std::vector<std::size_t> x_intercepts(const Path& p) {
  std::vector<std::size_t> out{0};
  int h = 0;
  for (std::size_t t = 0; t < p.length(); ++t) {
    h += delta(p[t]);
    if (h == 0) out.push_back(t + 1);
  }
  return out;
}

bool is_even_zeroed(const Path& p) {
  int h = 0;
  for (std::size_t t = 0; t < p.length(); ++t) {
    h += delta(p[t]);
    if (h == 0 && (t + 1) % 4 != 0) return false;
  }
  return true;
}

bool is_balanced(const Path& p) { return p.final_height() == 0; }

bool is_dyck(const Path& p) {
  int h = 0;
  for (Step s : p.steps()) {
    h += delta(s);
    if (h < 0) return false;
  }
  return h == 0;
}

Path reflect(const Path& p) {
  std::vector<Step> steps(p.steps().begin(), p.steps().end());
  for (Step& s : steps) s = flipped(s);
  return Path(std::move(steps));
}

Path concat(const Path& p, const Path& q) {
  std::vector<Step> steps;
  steps.reserve(p.length() + q.length());
  steps.insert(steps.end(), p.steps().begin(), p.steps().end());
  steps.insert(steps.end(), q.steps().begin(), q.steps().end());
  return Path(std::move(steps));
}

BalancedPath::BalancedPath(Path p) : path_(std::move(p)) {
  if (!is_balanced(path_)) throw DomainError("path is not balanced", path_.str());
}

DyckPath::DyckPath(Path p) : path_(std::move(p)) {
  if (!is_dyck(path_)) throw DomainError("path is not a Dyck path", path_.str());
}

std::string SignedDyckPath::str() const {
  std::string s;
  s.push_back(to_char(sign));
  s.push_back('(');
  s += path.str();
  s.push_back(')');
  return s;
}

std::size_t SignedSeq::weight() const noexcept {
  std::size_t w = 0;
  for (const auto& item : items_) w += item.parameter() + 1;
  return w;
}

bool SignedSeq::all_parameters_odd() const noexcept {
  return std::all_of(items_.begin(), items_.end(),
                     [](const SignedDyckPath& item) { return item.parameter() % 2 == 1; });
}

std::string SignedSeq::str() const {
  std::string s;
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (i) s.push_back(' ');
    s += items_[i].str();
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const SignedSeq& s) { return os << s.str(); }

SignedSeq parse_signed_seq(std::string_view text) {
  std::vector<SignedDyckPath> items;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  while (i < text.size()) {
    SignedDyckPath item;
    if (text[i] == '+') {
      item.sign = Sign::Plus;
    } else if (text[i] == '-') {
      item.sign = Sign::Minus;
    } else {
      throw ParseError("expected '+' or '-'", i);
    }
    ++i;
    if (i >= text.size() || text[i] != '(') throw ParseError("expected '('", i);
    const std::size_t open = ++i;
    const std::size_t close = text.find(')', open);
    if (close == std::string_view::npos) throw ParseError("unterminated item", text.size());
    Path body;
    try {
      body = parse_path(text.substr(open, close - open));
    } catch (const ParseError& e) {
      throw ParseError("invalid step character", open + e.position());
    }
    item.path = DyckPath(std::move(body));
    items.push_back(std::move(item));
    i = close + 1;
    if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
      throw ParseError("expected whitespace between items", i);
    skip_space();
  }
  return SignedSeq(std::move(items));
}

}  // namespace catconv
