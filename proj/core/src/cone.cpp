#include "cone.hpp"

#include <cstdint>

namespace okounkov::detail {

namespace {

class Bits {
 public:
  explicit Bits(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) {
    if (i / 64 >= words_.size()) words_.resize(i / 64 + 1, 0);
    words_[i / 64] |= (std::uint64_t{1} << (i % 64));
  }
  Bits operator&(const Bits& o) const {
    Bits r;
    r.words_.resize(std::min(words_.size(), o.words_.size()));
    for (std::size_t i = 0; i < r.words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
    return r;
  }
  bool subset_of(const Bits& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t other = i < o.words_.size() ? o.words_[i] : 0;
      if (words_[i] & ~other) return false;
    }
    return true;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Ray {
  RatVec v;
  Bits zero;
};

}  // namespace

ConeGenerators extreme_rays(const RatMat& constraints, std::size_t dim) {
  RatMat lin = identity(dim);
  std::vector<Ray> rays;

  for (std::size_t k = 0; k < constraints.size(); ++k) {
    const RatVec& a = constraints[k];
    std::size_t pick = lin.size();
    for (std::size_t i = 0; i < lin.size(); ++i) {
      if (dot(a, lin[i]) != 0) {
        pick = i;
        break;
      }
    }
    if (pick < lin.size()) {
      RatVec l = lin[pick];
      Rat al = dot(a, l);
      if (al < 0) {
        l = Rat(-1) * l;
        al = -al;
      }
      RatMat next;
      for (std::size_t i = 0; i < lin.size(); ++i) {
        if (i == pick) continue;
        next.push_back(primitive(lin[i] - (dot(a, lin[i]) / al) * l));
      }
      for (auto& r : rays) {
        r.v = primitive(r.v - (dot(a, r.v) / al) * l);
        r.zero.set(k);
      }
      Ray fresh{primitive(l), Bits(k + 1)};
      for (std::size_t j = 0; j < k; ++j) fresh.zero.set(j);
      rays.push_back(std::move(fresh));
      lin = std::move(next);
      continue;
    }

    std::vector<Rat> val(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) val[i] = dot(a, rays[i].v);
    std::vector<std::size_t> pidx, nidx;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (val[i] > 0) pidx.push_back(i);
      if (val[i] < 0) nidx.push_back(i);
    }
    if (nidx.empty()) {
      for (std::size_t i = 0; i < rays.size(); ++i)
        if (val[i] == 0) rays[i].zero.set(k);
      continue;
    }
    const std::size_t need = (dim - lin.size() >= 2) ? dim - lin.size() - 2 : 0;
    std::vector<Ray> out;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (val[i] > 0) out.push_back(rays[i]);
      if (val[i] == 0) {
        out.push_back(rays[i]);
        out.back().zero.set(k);
      }
    }
    for (auto p : pidx) {
      for (auto q : nidx) {
        Bits common = rays[p].zero & rays[q].zero;
        if (common.count() < need) continue;
        bool adjacent = true;
        for (std::size_t o = 0; o < rays.size() && adjacent; ++o) {
          if (o == p || o == q) continue;
          if (common.subset_of(rays[o].zero)) adjacent = false;
        }
        if (!adjacent) continue;
        Ray r{primitive(val[p] * rays[q].v - val[q] * rays[p].v), common};
        r.zero.set(k);
        out.push_back(std::move(r));
      }
    }
    rays = std::move(out);
  }

  ConeGenerators res;
  res.lineality = std::move(lin);
  for (auto& r : rays) res.rays.push_back(std::move(r.v));
  return res;
}

}  // namespace okounkov::detail
