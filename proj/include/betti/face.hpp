#pragma once

#include <cstdint>
#include <vector>

#include "betti/ideal.hpp"

namespace betti {

// Face of the simplex on generator indices {0..r-1}: a sorted set of ints.
// Total order is (size, lex), which is what the deformation pivots on within
// a fixed size; across sizes the size comparison never actually fires there.
class Face {
 public:
  Face() = default;
  explicit Face(std::vector<int> members);  // must be sorted strictly ascending
  static Face singleton(int v) { return Face(std::vector<int>{v}); }

  int size() const { return static_cast<int>(v_.size()); }
  bool empty() const { return v_.empty(); }
  bool contains(int v) const;
  int max() const { return v_.back(); }  // requires nonempty
  const std::vector<int>& members() const { return v_; }

  Face with(int v) const;     // insert, v must be absent
  Face without(int v) const;  // erase, v must be present

  friend bool operator==(const Face& a, const Face& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Face& a, const Face& b) { return !(a == b); }
  friend bool operator<(const Face& a, const Face& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.v_ < b.v_;
  }

 private:
  std::vector<int> v_;
};

struct FaceHash {
  std::size_t operator()(const Face& f) const {
    std::size_t h = 1469598103934665603ull;
    for (int v : f.members()) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// (-1)^(q-1) where v is the q-th smallest member of f (v must belong to f).
int sign_in(int v, const Face& f);

// lcm of the generators indexed by f; unit for the empty face.
Monomial face_label(const Face& f, const MonomialIdeal& ideal);

// True iff some k in {0..r-1} has u_k dividing the label of the members of f
// strictly greater than k.
bool lyu_member(const Face& f, const MonomialIdeal& ideal);

// Coefficient of tau in the differential of sigma, where tau = sigma minus one
// vertex: {sign, m_sigma / m_tau}. Throws if tau is not codimension-1 in sigma.
std::pair<int, Monomial> differential_coefficient(const Face& sigma, const Face& tau,
                                                  const MonomialIdeal& ideal);

enum class StartComplex { taylor, lyubeznik };

bool face_admissible(const Face& f, const MonomialIdeal& ideal, StartComplex start);

// All admissible faces with `size` vertices, lex order.
std::vector<Face> enumerate_admissible_faces(int size, const MonomialIdeal& ideal,
                                             StartComplex start);

}  // namespace betti
