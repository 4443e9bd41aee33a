#include "betti/face.hpp"

#include <algorithm>
#include <stdexcept>

namespace betti {

Face::Face(std::vector<int> members) : v_(std::move(members)) {
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (v_[i] < 0) throw std::invalid_argument("negative face member");
    if (i > 0 && v_[i - 1] >= v_[i])
      throw std::invalid_argument("face members must be strictly ascending");
  }
}

bool Face::contains(int v) const {
  return std::binary_search(v_.begin(), v_.end(), v);
}

Face Face::with(int v) const {
  Face out;
  out.v_.reserve(v_.size() + 1);
  auto it = std::lower_bound(v_.begin(), v_.end(), v);
  if (it != v_.end() && *it == v) throw std::invalid_argument("vertex already in face");
  out.v_.insert(out.v_.end(), v_.begin(), it);
  out.v_.push_back(v);
  out.v_.insert(out.v_.end(), it, v_.end());
  return out;
}

Face Face::without(int v) const {
  auto it = std::lower_bound(v_.begin(), v_.end(), v);
  if (it == v_.end() || *it != v) throw std::invalid_argument("vertex not in face");
  Face out;
  out.v_.reserve(v_.size() - 1);
  out.v_.insert(out.v_.end(), v_.begin(), it);
  out.v_.insert(out.v_.end(), it + 1, v_.end());
  return out;
}

int sign_in(int v, const Face& f) {
  auto it = std::lower_bound(f.members().begin(), f.members().end(), v);
  if (it == f.members().end() || *it != v)
    throw std::invalid_argument("sign_in: vertex not in face");
  return (it - f.members().begin()) % 2 == 0 ? 1 : -1;
}

Monomial face_label(const Face& f, const MonomialIdeal& ideal) {
  Exponents e = Exponents::Zero(ideal.n_vars());
  for (int v : f.members()) {
    if (v >= ideal.n_generators()) throw std::invalid_argument("face member out of range");
    e = e.cwiseMax(ideal.generator(v).exponents());
  }
  return Monomial(std::move(e));
}

bool lyu_member(const Face& f, const MonomialIdeal& ideal) {
  if (f.empty()) return false;
  const auto& m = f.members();
  const int s = f.size();
  // suffix[j] = label of {m[j], .., m[s-1]}
  std::vector<Exponents> suffix(s + 1);
  suffix[s] = Exponents::Zero(ideal.n_vars());
  for (int j = s - 1; j >= 0; --j)
    suffix[j] = suffix[j + 1].cwiseMax(ideal.generator(m[j]).exponents());

  int j = 0;
  for (int k = 0; k < ideal.n_generators(); ++k) {
    while (j < s && m[j] <= k) ++j;  // members > k start at j
    if (j == s) break;               // suffix label is 1, nothing divides it
    const auto& label = suffix[j];
    if ((ideal.generator(k).exponents().array() <= label.array()).all()) return true;
  }
  return false;
}

std::pair<int, Monomial> differential_coefficient(const Face& sigma, const Face& tau,
                                                  const MonomialIdeal& ideal) {
  if (tau.size() + 1 != sigma.size())
    throw std::invalid_argument("differential_coefficient: not codimension 1");
  int removed = -1;
  {
    std::size_t i = 0, j = 0;
    const auto& a = sigma.members();
    const auto& b = tau.members();
    while (i < a.size()) {
      if (j < b.size() && a[i] == b[j]) {
        ++i;
        ++j;
      } else if (removed == -1) {
        removed = a[i++];
      } else {
        throw std::invalid_argument("differential_coefficient: tau not a subset of sigma");
      }
    }
    if (j != b.size()) throw std::invalid_argument("differential_coefficient: tau not a subset of sigma");
  }
  Monomial ms = face_label(sigma, ideal);
  Monomial mt = face_label(tau, ideal);
  return {sign_in(removed, sigma), quotient(ms, mt)};
}

bool face_admissible(const Face& f, const MonomialIdeal& ideal, StartComplex start) {
  if (!f.empty() && f.max() >= ideal.n_generators())
    throw std::invalid_argument("face member out of range");
  if (start == StartComplex::taylor) return true;
  return !lyu_member(f, ideal);
}

std::vector<Face> enumerate_admissible_faces(int size, const MonomialIdeal& ideal,
                                             StartComplex start) {
  const int r = ideal.n_generators();
  std::vector<Face> out;
  if (size < 0 || size > r) return out;
  std::vector<int> pick(size);
  // standard next-combination walk, lex order
  for (int i = 0; i < size; ++i) pick[i] = i;
  for (;;) {
    Face f(pick);
    if (face_admissible(f, ideal, start)) out.push_back(std::move(f));
    if (size == 0) break;
    int i = size - 1;
    while (i >= 0 && pick[i] == r - size + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

}  // namespace betti
