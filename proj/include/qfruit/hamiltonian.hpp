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

#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qfruit {

/// Raised for any user-input mistake. The message is shown verbatim as the
/// CLI "Message" output.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using StateIndex = std::uint64_t;

/// Every field of one compilation request.
struct FruitSpec {
  std::string file_prefix;
  int nb_line = 1;
  int nb_tree = 2;
  double g = 0.0;
  std::int64_t door = 0;
  std::string bands_text;
  int nt_line = 1;
  int r_line = 2;
  int nt_tree = 1;
  int nt_meta = 1;
  int r_meta = 2;

  /// Throws InputError naming the first offending field.
  void validate() const;
};

/// Index geometry of the padded H_fruit register.
///
/// Global state order: line states [0, ns_line), then tree states
/// [ns_line, ns_line + ns_tree) in heap order (local 0 is the dud node,
/// local 1 the root), then one extra state per leaf, then zero padding up to
/// ns_total.
struct FruitLayout {
  int nb_line = 0;
  int nb_tree = 0;
  int nb_lvs = 0;
  int nb_total = 0;
  StateIndex ns_line = 0;
  StateIndex ns_tree = 0;
  StateIndex ns_lvs = 0;
  StateIndex ns_total = 0;
  StateIndex tree_offset = 0;
  StateIndex oracle_block_offset = 0;
  StateIndex extra_offset = 0;

  static FruitLayout make(int nb_line, int nb_tree);

  StateIndex dud_node() const { return tree_offset; }
  StateIndex tree_root() const { return tree_offset + 1; }
  StateIndex leaf(StateIndex k) const { return oracle_block_offset + k; }
  StateIndex extra(StateIndex k) const { return extra_offset + k; }
};

/// Real symmetric matrix stored as weighted unordered pairs plus a diagonal.
class SparseSymmetric {
 public:
  struct Edge {
    StateIndex i;
    StateIndex j;
    double w;
    bool operator==(const Edge&) const = default;
  };

  SparseSymmetric() = default;
  explicit SparseSymmetric(StateIndex dim) : dim_(dim) {}

  StateIndex dim() const { return dim_; }

  /// Adds the pair {i, j} with weight w. Endpoints may be given in either
  /// order; a pair that is already present is rejected.
  void add_pair(StateIndex i, StateIndex j, double w);
  void set_diagonal(StateIndex k, double w);

  /// Pairs ordered by (smaller endpoint, larger endpoint); i < j always.
  std::vector<Edge> pairs() const;
  const std::map<StateIndex, double>& diagonal() const { return diagonal_; }
  bool has_pair(StateIndex i, StateIndex j) const;
  double at(StateIndex i, StateIndex j) const;

  /// Embeds this matrix into a larger zero matrix with its block starting at
  /// `offset`.
  SparseSymmetric embedded(StateIndex new_dim, StateIndex offset) const;

  /// Entrywise sum; both operands must have the same dimension.
  SparseSymmetric operator+(const SparseSymmetric& other) const;
  SparseSymmetric scaled(double factor) const;

  bool operator==(const SparseSymmetric&) const = default;

 private:
  void check_index(StateIndex k) const;

  StateIndex dim_ = 0;
  std::map<std::pair<StateIndex, StateIndex>, double> off_diagonal_;
  std::map<StateIndex, double> diagonal_;
};

/// x_k for every leaf k, in leaf order.
struct NandInputs {
  std::vector<bool> x;
};

/// Binary-reflected Gray sequence of length 2^n starting at 0.
std::vector<StateIndex> gray_code(int n);

/// g times the incidence matrix of the path through the Gray sequence.
SparseSymmetric build_line_hamiltonian(int nb_line, double g);

/// g times the incidence matrix of the balanced binary tree in heap order;
/// node 0 is the isolated dud node.
SparseSymmetric build_tree_hamiltonian(int nb_tree, double g);

/// Parses "a1,b1,a2,b2,..." band notation into leaf inputs. Throws InputError
/// with a human-readable explanation on malformed input.
NandInputs parse_bands(std::string_view bands_text, StateIndex ns_lvs);

/// Smallest N with 2^nb_line + (3/2) 2^nb_tree <= 2^N.
int num_qubits_required(int nb_line, int nb_tree);

struct FruitHamiltonians {
  FruitLayout layout;
  NandInputs inputs;
  SparseSymmetric line;  // all blocks below are in global ns_total indexing
  SparseSymmetric tree;
  SparseSymmetric glue;
  SparseSymmetric oracle;
  SparseSymmetric bulk;
  SparseSymmetric corr;
  SparseSymmetric fruit;
};

FruitHamiltonians assemble_fruit(const FruitSpec& spec);

}  // namespace qfruit
