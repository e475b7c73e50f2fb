#include "sl2chow/extalg.hpp"

#include <bit>
#include <set>

namespace sl2chow {

ContextPtr make_context(std::vector<std::string> labels) {
  if (labels.size() > 64) fail(Errc::bad_argument, "more than 64 generators");
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) fail(Errc::bad_argument, "duplicate generator label");
  return std::make_shared<const AlgebraContext>(AlgebraContext{std::move(labels)});
}

bool same_context(const ContextPtr& a, const ContextPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->labels == b->labels;
}

int mask_degree(Mask m) { return std::popcount(m); }

int merge_sign(Mask a, Mask b) {
  if (a & b) return 0;
  int inversions = 0;
  Mask rest = a;
  while (rest) {
    int i = std::countr_zero(rest);
    rest &= rest - 1;
    inversions += std::popcount(b & ((Mask(1) << i) - 1));
  }
  return (inversions & 1) ? -1 : 1;
}

ExtClass ExtClass::scalar(ContextPtr ctx, const Rational& c) {
  ExtClass z(std::move(ctx));
  z.add_term(0, c);
  return z;
}

ExtClass ExtClass::monomial(ContextPtr ctx, Mask m, const Rational& c) {
  ExtClass z(std::move(ctx));
  if (m & ~z.ctx_->full_mask()) fail(Errc::bad_argument, "monomial outside context");
  z.add_term(m, c);
  return z;
}

Rational ExtClass::coefficient(Mask m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void ExtClass::add_term(Mask m, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_[m] = c;
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ExtClass ExtClass::operator-() const { return scaled(-1); }

ExtClass ExtClass::scaled(const Rational& c) const {
  ExtClass z(ctx_);
  if (c == 0) return z;
  for (const auto& [m, v] : terms_) z.terms_[m] = v * c;
  return z;
}

ExtClass operator+(const ExtClass& a, const ExtClass& b) {
  if (!same_context(a.ctx_, b.ctx_)) fail(Errc::context_mismatch, "sum across contexts");
  ExtClass z = a;
  for (const auto& [m, v] : b.terms_) z.add_term(m, v);
  return z;
}

ExtClass operator-(const ExtClass& a, const ExtClass& b) { return a + (-b); }

bool ExtClass::operator==(const ExtClass& other) const {
  return same_context(ctx_, other.ctx_) && terms_ == other.terms_;
}

ExtClass ExtClass::graded_part(int degree) const {
  ExtClass z(ctx_);
  for (const auto& [m, v] : terms_)
    if (mask_degree(m) == degree) z.terms_[m] = v;
  return z;
}

std::map<int, ExtClass> ExtClass::graded_parts() const {
  std::map<int, ExtClass> parts;
  for (const auto& [m, v] : terms_) {
    int d = mask_degree(m);
    auto it = parts.find(d);
    if (it == parts.end()) it = parts.emplace(d, ExtClass(ctx_)).first;
    it->second.add_term(m, v);
  }
  return parts;
}

bool ExtClass::is_homogeneous(int* degree) const {
  if (terms_.empty()) {
    if (degree) *degree = -1;
    return true;
  }
  int d = mask_degree(terms_.begin()->first);
  for (const auto& [m, v] : terms_) {
    (void)v;
    if (mask_degree(m) != d) return false;
  }
  if (degree) *degree = d;
  return true;
}

int ExtClass::max_degree() const {
  int d = 0;
  for (const auto& [m, v] : terms_) {
    (void)v;
    d = std::max(d, mask_degree(m));
  }
  return d;
}

ExtClass wedge(const ExtClass& a, const ExtClass& b) {
  if (!same_context(a.context(), b.context()))
    fail(Errc::context_mismatch, "wedge across contexts");
  ExtClass z(a.context());
  for (const auto& [ma, va] : a.terms()) {
    for (const auto& [mb, vb] : b.terms()) {
      int s = merge_sign(ma, mb);
      if (s != 0) {
        Rational prod = va * vb;
        if (s < 0) prod = -prod;
        z.add_term(ma | mb, prod);
      }
    }
  }
  return z;
}

ExtClass algebra_map(const ContextPtr& from, const ContextPtr& to,
                     const std::vector<ExtClass>& images, const ExtClass& cls) {
  if (!same_context(cls.context(), from))
    fail(Errc::context_mismatch, "class not in source context");
  if (images.size() != from->size())
    fail(Errc::missing_image, "need one image per generator");
  for (const auto& img : images) {
    if (!same_context(img.context(), to))
      fail(Errc::context_mismatch, "image in wrong context");
    for (const auto& [m, v] : img.terms()) {
      (void)v;
      if (mask_degree(m) != 1) fail(Errc::non_linear_image, "generator image not of degree 1");
    }
  }
  ExtClass out(to);
  for (const auto& [m, v] : cls.terms()) {
    ExtClass term = ExtClass::scalar(to, v);
    Mask rest = m;
    while (rest && !term.is_zero()) {
      int i = std::countr_zero(rest);
      rest &= rest - 1;
      term = wedge(term, images[static_cast<std::size_t>(i)]);
    }
    out = out + term;
  }
  return out;
}

Rational integral(const ExtClass& cls, Mask orientation) {
  if (orientation != cls.context()->full_mask())
    fail(Errc::bad_argument, "orientation must be the full monomial");
  return cls.coefficient(orientation);
}

ExtClass exp_even(const ExtClass& cls) {
  for (const auto& [m, v] : cls.terms()) {
    (void)v;
    int d = mask_degree(m);
    if (d == 0) fail(Errc::constant_term, "exp of class with a degree-0 term");
    if (d % 2 != 0) fail(Errc::odd_degree_term, "exp of class with an odd-degree term");
  }
  ExtClass out = ExtClass::scalar(cls.context(), 1);
  ExtClass pow = ExtClass::scalar(cls.context(), 1);
  unsigned long k = 1;
  while (true) {
    pow = wedge(pow, cls);
    if (pow.is_zero()) break;
    out = out + pow.scaled(Rational(1) / factorial(k));
    ++k;
  }
  return out;
}

}  // namespace sl2chow
