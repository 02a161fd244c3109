// Copyright 2026 The qfruit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qfruit/hamiltonian.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <utility>

namespace qfruit {

namespace {

// Keeps 2^nb_total well inside 64-bit state indices.
constexpr int kMaxBlockQubits = 30;

std::string str(std::int64_t v) { return std::to_string(v); }

}  // namespace

void FruitSpec::validate() const {
  if (nb_line < 1 || nb_line > kMaxBlockQubits)
    throw InputError("Line: Number of Qubits must be in [1, " +
                     str(kMaxBlockQubits) + "], got " + str(nb_line));
  if (nb_tree < 2 || nb_tree > kMaxBlockQubits)
    throw InputError("Tree: Number of Qubits must be in [2, " +
                     str(kMaxBlockQubits) + "], got " + str(nb_tree) +
                     " (a tree needs at least one leaf below the root)");
  const std::int64_t ns_line = std::int64_t{1} << nb_line;
  if (door < 0 || door > ns_line - 1)
    throw InputError("Line Door must be in [0, " + str(ns_line - 1) +
                     "], got " + str(door));
  auto check_trots = [](int n, const char* name) {
    if (n < 1)
      throw InputError(std::string(name) +
                       ": Number of Trots must be >= 1, got " + str(n));
  };
  auto check_order = [](int r, const char* name) {
    if (r < 2 || r % 2 != 0)
      throw InputError(std::string(name) +
                       ": Order of Approximant must be even (2, 4, 6, ...), "
                       "got " +
                       str(r) + "; order must be even");
  };
  check_trots(nt_line, "Line");
  check_trots(nt_tree, "Tree");
  check_trots(nt_meta, "Meta");
  check_order(r_line, "Line");
  check_order(r_meta, "Meta");
}

FruitLayout FruitLayout::make(int nb_line, int nb_tree) {
  FruitLayout l;
  l.nb_line = nb_line;
  l.nb_tree = nb_tree;
  l.nb_lvs = nb_tree - 1;
  l.nb_total = num_qubits_required(nb_line, nb_tree);
  l.ns_line = StateIndex{1} << nb_line;
  l.ns_tree = StateIndex{1} << nb_tree;
  l.ns_lvs = l.ns_tree / 2;
  l.ns_total = StateIndex{1} << l.nb_total;
  l.tree_offset = l.ns_line;
  l.oracle_block_offset = l.ns_line + l.ns_lvs;
  l.extra_offset = l.ns_line + l.ns_tree;
  return l;
}

void SparseSymmetric::check_index(StateIndex k) const {
  if (k >= dim_)
    throw std::out_of_range("state index " + std::to_string(k) +
                            " outside dimension " + std::to_string(dim_));
}

void SparseSymmetric::add_pair(StateIndex i, StateIndex j, double w) {
  check_index(i);
  check_index(j);
  if (i == j) throw std::invalid_argument("pair endpoints must differ");
  auto key = std::minmax(i, j);
  if (!off_diagonal_.emplace(std::pair{key.first, key.second}, w).second)
    throw std::invalid_argument("duplicate pair (" + std::to_string(key.first) +
                                ", " + std::to_string(key.second) + ")");
}

void SparseSymmetric::set_diagonal(StateIndex k, double w) {
  check_index(k);
  diagonal_[k] = w;
}

std::vector<SparseSymmetric::Edge> SparseSymmetric::pairs() const {
  std::vector<Edge> out;
  out.reserve(off_diagonal_.size());
  for (const auto& [key, w] : off_diagonal_)
    out.push_back({key.first, key.second, w});
  return out;
}

bool SparseSymmetric::has_pair(StateIndex i, StateIndex j) const {
  auto key = std::minmax(i, j);
  return off_diagonal_.count({key.first, key.second}) != 0;
}

double SparseSymmetric::at(StateIndex i, StateIndex j) const {
  check_index(i);
  check_index(j);
  if (i == j) {
    auto it = diagonal_.find(i);
    return it == diagonal_.end() ? 0.0 : it->second;
  }
  auto key = std::minmax(i, j);
  auto it = off_diagonal_.find({key.first, key.second});
  return it == off_diagonal_.end() ? 0.0 : it->second;
}

SparseSymmetric SparseSymmetric::embedded(StateIndex new_dim,
                                          StateIndex offset) const {
  if (offset + dim_ > new_dim)
    throw std::out_of_range("embedding does not fit in target dimension");
  SparseSymmetric out(new_dim);
  for (const auto& [key, w] : off_diagonal_)
    out.off_diagonal_.emplace(std::pair{key.first + offset, key.second + offset},
                              w);
  for (const auto& [k, w] : diagonal_) out.diagonal_.emplace(k + offset, w);
  return out;
}

SparseSymmetric SparseSymmetric::operator+(const SparseSymmetric& other) const {
  if (dim_ != other.dim_)
    throw std::invalid_argument("dimension mismatch in SparseSymmetric sum");
  SparseSymmetric out = *this;
  for (const auto& [key, w] : other.off_diagonal_) out.off_diagonal_[key] += w;
  for (const auto& [k, w] : other.diagonal_) out.diagonal_[k] += w;
  return out;
}

SparseSymmetric SparseSymmetric::scaled(double factor) const {
  SparseSymmetric out = *this;
  for (auto& [key, w] : out.off_diagonal_) w *= factor;
  for (auto& [k, w] : out.diagonal_) w *= factor;
  return out;
}

std::vector<StateIndex> gray_code(int n) {
  if (n < 1) throw std::invalid_argument("gray_code needs n >= 1");
  std::vector<StateIndex> seq(StateIndex{1} << n);
  for (StateIndex j = 0; j < seq.size(); ++j) seq[j] = j ^ (j >> 1);
  return seq;
}

SparseSymmetric build_line_hamiltonian(int nb_line, double g) {
  const auto gray = gray_code(nb_line);
  SparseSymmetric h(gray.size());
  for (std::size_t j = 0; j + 1 < gray.size(); ++j)
    h.add_pair(gray[j], gray[j + 1], g);
  return h;
}

SparseSymmetric build_tree_hamiltonian(int nb_tree, double g) {
  if (nb_tree < 2)
    throw std::invalid_argument("tree Hamiltonian needs nb_tree >= 2");
  const StateIndex ns = StateIndex{1} << nb_tree;
  SparseSymmetric h(ns);
  for (StateIndex parent = 1; parent < ns / 2; ++parent) {
    h.add_pair(parent, 2 * parent, g);
    h.add_pair(parent, 2 * parent + 1, g);
  }
  return h;
}

NandInputs parse_bands(std::string_view text, StateIndex ns_lvs) {
  // A '-' directly in front of a digit belongs to the integer; every other
  // non-digit character is a separator.
  std::vector<std::int64_t> ints;
  for (std::size_t pos = 0; pos < text.size();) {
    const bool negative = text[pos] == '-' && pos + 1 < text.size() &&
                          std::isdigit(static_cast<unsigned char>(text[pos + 1]));
    if (!negative && !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    std::size_t end = pos + 1;
    while (end < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[end])))
      ++end;
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + end, value);
    if (ec != std::errc())
      throw InputError("Bands: integer '" +
                       std::string(text.substr(pos, end - pos)) +
                       "' is out of range");
    ints.push_back(value);
    pos = end;
  }

  if (ints.size() % 2 != 0)
    throw InputError("Bands: expected an even number of integers (pairs a,b), "
                     "got " +
                     std::to_string(ints.size()));

  const auto last_leaf = static_cast<std::int64_t>(ns_lvs) - 1;
  for (std::int64_t v : ints)
    if (v < 0 || v > last_leaf)
      throw InputError("Bands: endpoint " + str(v) + " is outside [0, " +
                       str(last_leaf) + "]");

  NandInputs out;
  out.x.assign(ns_lvs, false);
  for (std::size_t i = 0; i < ints.size(); i += 2) {
    const auto a = ints[i];
    const auto b = ints[i + 1];
    const auto band = "band " + str(a) + "," + str(b);
    if (b < a)
      throw InputError("Bands: " + band + " is decreasing (need b >= a)");
    if (i >= 2) {
      const auto prev_b = ints[i - 1];
      const auto prev = "band " + str(ints[i - 2]) + "," + str(prev_b);
      if (a - prev_b == 1)
        throw InputError("Bands: " + prev + " and " + band +
                         " are adjacent and can be merged");
      if (a - prev_b <= 0)
        throw InputError("Bands: " + prev + " and " + band + " overlap");
    }
    for (auto k = a; k <= b; ++k) out.x[static_cast<std::size_t>(k)] = true;
  }
  return out;
}

int num_qubits_required(int nb_line, int nb_tree) {
  if (nb_line < 1 || nb_tree < 2)
    throw std::invalid_argument("num_qubits_required needs nb_line >= 1, "
                                "nb_tree >= 2");
  // 2^nb_line + 3 * 2^(nb_tree - 1) is an integer count of states.
  const StateIndex needed =
      (StateIndex{1} << nb_line) + 3 * (StateIndex{1} << (nb_tree - 1));
  int n = 0;
  while ((StateIndex{1} << n) < needed) ++n;
  return n;
}

FruitHamiltonians assemble_fruit(const FruitSpec& spec) {
  spec.validate();
  FruitHamiltonians h;
  h.layout = FruitLayout::make(spec.nb_line, spec.nb_tree);
  const auto& l = h.layout;
  h.inputs = parse_bands(spec.bands_text, l.ns_lvs);

  h.line = build_line_hamiltonian(spec.nb_line, spec.g).embedded(l.ns_total, 0);
  h.tree = build_tree_hamiltonian(spec.nb_tree, spec.g)
               .embedded(l.ns_total, l.tree_offset);
  h.glue = SparseSymmetric(l.ns_total);
  h.glue.add_pair(static_cast<StateIndex>(spec.door), l.tree_root(), spec.g);
  h.oracle = SparseSymmetric(l.ns_total);
  for (StateIndex k = 0; k < l.ns_lvs; ++k)
    if (h.inputs.x[k]) h.oracle.add_pair(l.leaf(k), l.extra(k), spec.g);

  h.bulk = h.line + h.tree;
  h.corr = h.glue + h.oracle;
  h.fruit = h.bulk + h.corr;
  return h;
}

}  // namespace qfruit
