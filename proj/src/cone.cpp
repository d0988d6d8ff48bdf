#include "colfan/cone.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace colfan {

namespace {

void require_all(const std::vector<RatVec>& vs, std::size_t n, const char* what) {
  for (const auto& v : vs) require_dim(v, n, what);
}

std::vector<RatVec> sorted_unique(std::vector<RatVec> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

// Representative of v modulo span(basis): the component orthogonal to it.
RatVec reduce_modulo(const RatVec& v, const std::vector<RatVec>& basis) {
  return primitive(sub(v, project_onto_span(v, basis)));
}

}  // namespace

DoubleDescription double_description(const std::vector<RatVec>& ineqs, std::size_t n) {
  require_all(ineqs, n, "double_description");
  DoubleDescription dd;
  for (std::size_t i = 0; i < n; ++i) dd.lineality.push_back(unit_vec(n, i));
  std::vector<RatVec> processed;

  for (const auto& a : ineqs) {
    if (is_zero(a)) continue;

    auto lin_it = std::find_if(dd.lineality.begin(), dd.lineality.end(),
                               [&](const RatVec& l) { return dot(a, l) != 0; });
    if (lin_it != dd.lineality.end()) {
      RatVec pivot = *lin_it;
      dd.lineality.erase(lin_it);
      Rational s = dot(a, pivot);
      if (s < 0) {
        pivot = negate(pivot);
        s = -s;
      }
      for (auto& l : dd.lineality) l = sub(l, scale(pivot, dot(a, l) / s));
      for (auto& r : dd.rays) r = primitive(sub(r, scale(pivot, dot(a, r) / s)));
      dd.rays.push_back(primitive(pivot));
      processed.push_back(a);
      continue;
    }

    std::vector<RatVec> pos, zero, neg;
    std::vector<Rational> pos_val, neg_val;
    for (auto& r : dd.rays) {
      const Rational v = dot(a, r);
      if (v > 0) {
        pos.push_back(r);
        pos_val.push_back(v);
      } else if (v < 0) {
        neg.push_back(r);
        neg_val.push_back(v);
      } else {
        zero.push_back(r);
      }
    }
    if (neg.empty()) {
      processed.push_back(a);
      continue;
    }

    const std::size_t base_rank = rank(processed);
    auto tight = [&](const RatVec& r) {
      std::vector<bool> z(processed.size());
      for (std::size_t k = 0; k < processed.size(); ++k) z[k] = dot(processed[k], r) == 0;
      return z;
    };
    std::vector<std::vector<bool>> pos_tight, neg_tight;
    for (const auto& p : pos) pos_tight.push_back(tight(p));
    for (const auto& q : neg) neg_tight.push_back(tight(q));

    std::vector<RatVec> next = pos;
    next.insert(next.end(), zero.begin(), zero.end());
    for (std::size_t i = 0; i < pos.size(); ++i) {
      for (std::size_t j = 0; j < neg.size(); ++j) {
        std::vector<RatVec> common;
        for (std::size_t k = 0; k < processed.size(); ++k)
          if (pos_tight[i][k] && neg_tight[j][k]) common.push_back(processed[k]);
        if (base_rank < 2 || common.size() + 2 < base_rank) continue;
        if (rank(common) != base_rank - 2) continue;
        // a-value of the combination is pos_val * neg_val - neg_val * pos_val = 0.
        next.push_back(primitive(sub(scale(neg[j], pos_val[i]), scale(pos[i], neg_val[j]))));
      }
    }
    dd.rays = sorted_unique(std::move(next));
    processed.push_back(a);
  }
  return dd;
}

Cone::Cone(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {
  for (std::size_t i = 0; i < ambient_dim; ++i) equations_.push_back(unit_vec(ambient_dim, i));
}

Cone Cone::from_generators(const std::vector<RatVec>& gens, std::size_t n) {
  require_all(gens, n, "cone generator");
  const auto dual = double_description(gens, n);

  std::vector<RatVec> dual_gens = dual.rays;
  for (const auto& l : dual.lineality) {
    dual_gens.push_back(l);
    dual_gens.push_back(negate(l));
  }
  const auto primal = double_description(dual_gens, n);

  Cone c(n);
  c.lineality_ = canonical_basis(primal.lineality);
  c.equations_ = canonical_basis(dual.lineality);
  for (const auto& r : primal.rays) {
    auto rr = reduce_modulo(r, c.lineality_);
    if (!colfan::is_zero(rr)) c.rays_.push_back(std::move(rr));
  }
  c.rays_ = sorted_unique(std::move(c.rays_));
  for (const auto& f : dual.rays) {
    auto ff = reduce_modulo(f, c.equations_);
    if (!colfan::is_zero(ff)) c.facets_.push_back(std::move(ff));
  }
  c.facets_ = sorted_unique(std::move(c.facets_));
  return c;
}

Cone Cone::from_inequalities(const std::vector<RatVec>& ineqs, std::size_t n) {
  require_all(ineqs, n, "cone inequality");
  const auto dd = double_description(ineqs, n);
  std::vector<RatVec> gens = dd.rays;
  for (const auto& l : dd.lineality) {
    gens.push_back(l);
    gens.push_back(negate(l));
  }
  return from_generators(gens, n);
}

Cone Cone::whole_space(std::size_t n) { return from_inequalities({}, n); }

std::vector<RatVec> Cone::inequalities() const {
  std::vector<RatVec> out = facets_;
  for (const auto& e : equations_) {
    out.push_back(e);
    out.push_back(negate(e));
  }
  return out;
}

std::vector<RatVec> Cone::generators() const {
  std::vector<RatVec> out = rays_;
  for (const auto& l : lineality_) {
    out.push_back(l);
    out.push_back(negate(l));
  }
  return out;
}

bool Cone::contains(const RatVec& v) const {
  require_dim(v, ambient_dim_, "contains");
  for (const auto& e : equations_)
    if (dot(e, v) != 0) return false;
  for (const auto& f : facets_)
    if (dot(f, v) < 0) return false;
  return true;
}

bool Cone::contains(const Cone& other) const {
  if (other.ambient_dim_ != ambient_dim_) throw DimensionError("cone containment across dimensions");
  for (const auto& g : other.generators())
    if (!contains(g)) return false;
  return true;
}

bool Cone::in_relative_interior(const RatVec& v) const {
  require_dim(v, ambient_dim_, "in_relative_interior");
  for (const auto& e : equations_)
    if (dot(e, v) != 0) return false;
  for (const auto& f : facets_)
    if (dot(f, v) <= 0) return false;
  return true;
}

RatVec Cone::interior_point() const {
  RatVec p(ambient_dim_);
  for (const auto& r : rays_) p = add(p, r);
  return p;
}

bool operator<(const Cone& a, const Cone& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  if (a.rays_ != b.rays_) return a.rays_ < b.rays_;
  if (a.lineality_ != b.lineality_) return a.lineality_ < b.lineality_;
  return a.ambient_dim_ < b.ambient_dim_;
}

std::vector<Cone> faces(const Cone& c) {
  const auto& rays = c.rays();
  const auto& facets = c.facets();
  std::vector<std::vector<bool>> on_facet(facets.size(), std::vector<bool>(rays.size()));
  for (std::size_t f = 0; f < facets.size(); ++f)
    for (std::size_t r = 0; r < rays.size(); ++r) on_facet[f][r] = dot(facets[f], rays[r]) == 0;

  std::set<std::vector<bool>> seen;
  std::vector<std::vector<bool>> queue{std::vector<bool>(rays.size(), true)};
  seen.insert(queue.front());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto current = queue[head];
    for (std::size_t f = 0; f < facets.size(); ++f) {
      std::vector<bool> sub(rays.size());
      for (std::size_t r = 0; r < rays.size(); ++r) sub[r] = current[r] && on_facet[f][r];
      if (sub != current && seen.insert(sub).second) queue.push_back(sub);
    }
  }

  std::vector<Cone> out;
  out.reserve(queue.size());
  for (const auto& mask : queue) {
    if (mask == queue.front()) {
      out.push_back(c);
      continue;
    }
    std::vector<RatVec> gens;
    for (std::size_t r = 0; r < rays.size(); ++r)
      if (mask[r]) gens.push_back(rays[r]);
    for (const auto& l : c.lineality()) {
      gens.push_back(l);
      gens.push_back(negate(l));
    }
    out.push_back(Cone::from_generators(gens, c.ambient_dim()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_face_of(const Cone& face, const Cone& c) {
  if (face.ambient_dim() != c.ambient_dim()) throw DimensionError("is_face_of across dimensions");
  if (!c.contains(face)) return false;
  const auto fs = faces(c);
  return std::find(fs.begin(), fs.end(), face) != fs.end();
}

Cone intersect(const Cone& a, const Cone& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("intersect across dimensions");
  auto ineqs = a.inequalities();
  const auto more = b.inequalities();
  ineqs.insert(ineqs.end(), more.begin(), more.end());
  return Cone::from_inequalities(ineqs, a.ambient_dim());
}

Cone image(const Cone& c, const RatMat& m) {
  if (m.cols() != c.ambient_dim())
    throw DimensionError("image: matrix has " + std::to_string(m.cols()) +
                         " columns but cone lives in dimension " + std::to_string(c.ambient_dim()));
  std::vector<RatVec> gens;
  for (const auto& g : c.generators()) gens.push_back(m.apply(g));
  return Cone::from_generators(gens, m.rows());
}

std::string to_string(const Cone& c) {
  if (c.rays().empty() && c.lineality().empty()) return "{0} in Q^" + std::to_string(c.ambient_dim());
  std::ostringstream os;
  os << "cone[";
  for (std::size_t i = 0; i < c.rays().size(); ++i) os << (i ? "," : "") << to_string(c.rays()[i]);
  os << ']';
  if (!c.lineality().empty()) {
    os << "+lin[";
    for (std::size_t i = 0; i < c.lineality().size(); ++i)
      os << (i ? "," : "") << to_string(c.lineality()[i]);
    os << ']';
  }
  return os.str();
}

}  // namespace colfan
