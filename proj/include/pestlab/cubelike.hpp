// Copyright 2026 The pest-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PESTLAB_CUBELIKE_HPP
#define PESTLAB_CUBELIKE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include <boost/rational.hpp>

#include "pestlab/boolfn.hpp"
#include "pestlab/group.hpp"

namespace pestlab {

using Rational = boost::rational<std::int64_t>;

// Connection set S of the cubelike graph Cay(F_2^m, S): sorted, without
// duplicates, 0 not a member. S = -S holds for free in characteristic 2.
class ConnectionSet {
 public:
  // Deduplicates; kZeroElement if 0 is present, kWidthMismatch for elements
  // wider than m.
  ConnectionSet(int m, std::vector<GroupElement> members);

  int dimension() const { return m_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  std::span<const GroupElement> members() const { return members_; }
  bool contains(GroupElement z) const;

  friend bool operator==(const ConnectionSet&, const ConnectionSet&) = default;

 private:
  int m_;
  std::vector<GroupElement> members_;
};

// kZeroElement when f(0) = 1.
ConnectionSet connection_set_of(const BooleanFunction& f);
BooleanFunction indicator(const ConnectionSet& s);

// lambda[x] = sum_{z in S} (-1)^{x.z}
struct Spectrum {
  int m = 0;
  std::vector<std::int64_t> lambda;

  std::int64_t operator[](GroupElement x) const { return lambda[x.bits]; }
};

Spectrum spectrum(const ConnectionSet& s);

// GF(2) rank of a list of masks.
int rank(std::span<const GroupElement> vectors);

// <S> = F_2^m
bool is_connected(const ConnectionSet& s);

// (E_x)_{g,h} = chi_x(g + h) / 2^m
Rational eigenprojection_entry(int m, GroupElement x, GroupElement g, GroupElement h);

}  // namespace pestlab

#endif  // PESTLAB_CUBELIKE_HPP
