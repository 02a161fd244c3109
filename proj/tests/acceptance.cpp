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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Tolerances are fixed here and never tuned at run time.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "qfruit/cli.hpp"
#include "qfruit/compile.hpp"
#include "qfruit/verify.hpp"

namespace {

using namespace qfruit;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& name, double limit_s,
            const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (secs > limit_s) {
    o.pass = false;
    o.detail += " (runtime limit exceeded)";
  }
  if (!o.pass) ++failures;
  std::printf("[%s] criterion %d: %s | %s | %.2fs (limit %.0fs)\n",
              o.pass ? "PASS" : "FAIL", id, name.c_str(), o.detail.c_str(), secs,
              limit_s);
  std::fflush(stdout);
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

DenseMatrix permutation(StateIndex k, int n) {
  const StateIndex dim = StateIndex{1} << n;
  DenseMatrix m = DenseMatrix::Zero(static_cast<Eigen::Index>(dim),
                                    static_cast<Eigen::Index>(dim));
  for (StateIndex x = 0; x < dim; ++x)
    m(static_cast<Eigen::Index>((x + k) % dim), static_cast<Eigen::Index>(x)) = 1.0;
  return m;
}

std::string bands_from(const std::vector<bool>& x) {
  std::string out;
  for (std::size_t k = 0; k < x.size();) {
    if (!x[k]) {
      ++k;
      continue;
    }
    std::size_t end = k;
    while (end + 1 < x.size() && x[end + 1]) ++end;
    if (!out.empty()) out += ";";
    out += std::to_string(k) + "," + std::to_string(end);
    k = end + 1;
  }
  return out;
}

struct Instance {
  FruitSpec spec;
  FruitHamiltonians h;
};

// nb_line in {1,2,3} x nb_tree in {2,3} x every door x g in {-0.7,0.3,1.1} x
// 20 random band patterns.
std::vector<Instance> grid() {
  std::vector<Instance> out;
  std::mt19937_64 rng(20260101);
  for (int nl = 1; nl <= 3; ++nl) {
    for (int nt = 2; nt <= 3; ++nt) {
      const auto layout = FruitLayout::make(nl, nt);
      std::vector<std::string> patterns;
      std::bernoulli_distribution coin(0.5);
      for (int p = 0; p < 20; ++p) {
        std::vector<bool> x(layout.ns_lvs);
        for (std::size_t k = 0; k < x.size(); ++k) x[k] = coin(rng);
        patterns.push_back(bands_from(x));
      }
      for (StateIndex d = 0; d < layout.ns_line; ++d)
        for (double g : {-0.7, 0.3, 1.1})
          for (const auto& bands : patterns) {
            FruitSpec s;
            s.file_prefix = "grid";
            s.nb_line = nl;
            s.nb_tree = nt;
            s.door = static_cast<std::int64_t>(d);
            s.g = g;
            s.bands_text = bands;
            out.push_back({s, assemble_fruit(s)});
          }
    }
  }
  return out;
}

Outcome criterion1(const std::vector<Instance>& instances) {
  double worst = 0;
  std::size_t checks = 0;
  for (const auto& inst : instances) {
    const auto& l = inst.h.layout;
    const auto door = static_cast<StateIndex>(inst.spec.door);
    worst = std::max(worst, verify_compile(inst.h.glue,
                                           compile_glue(l, door, inst.spec.g)));
    worst = std::max(worst, verify_compile(inst.h.oracle,
                                           compile_oracle(l, inst.h.inputs, inst.spec.g)));
    checks += 2;
  }
  for (int nl = 1; nl <= 3; ++nl)
    for (int nt = 2; nt <= 3; ++nt) {
      const auto l = FruitLayout::make(nl, nt);
      for (StateIndex k : {StateIndex{0}, StateIndex{1}, l.ns_total - 1, l.tree_offset,
                           l.oracle_block_offset, l.extra_offset}) {
        worst = std::max(worst, frobenius_distance(
                                    program_unitary(compile_shift(k, l.nb_total)),
                                    permutation(k, l.nb_total)));
        ++checks;
      }
    }
  return {worst <= 1e-9, std::to_string(checks) + " checks, max Frobenius error " +
                             fmt(worst) + " (tol 1e-9)"};
}

double line_error(double g, int r, int nt) {
  return frobenius_distance(program_unitary(compile_line(3, g, r, nt)),
                            expi_hermitian(build_line_hamiltonian(3, g)));
}

Outcome criterion2() {
  bool ok = true;
  std::string detail;
  for (int nt : {4, 8}) {
    const double ratio = line_error(0.5, 2, nt) / line_error(0.5, 2, 2 * nt);
    ok = ok && ratio >= 3.2 && ratio <= 4.8;
    detail += "r=2 ratio(" + std::to_string(nt) + "->" + std::to_string(2 * nt) +
              ")=" + fmt(ratio) + " ";
  }
  std::vector<double> lx, ly;
  for (int nt : {2, 4, 8}) {
    lx.push_back(std::log(1.0 / nt));
    ly.push_back(std::log(line_error(0.5, 4, nt)));
  }
  const double mx = (lx[0] + lx[1] + lx[2]) / 3, my = (ly[0] + ly[1] + ly[2]) / 3;
  double num = 0, den = 0;
  for (int i = 0; i < 3; ++i) {
    num += (lx[i] - mx) * (ly[i] - my);
    den += (lx[i] - mx) * (lx[i] - mx);
  }
  const double slope = num / den;
  ok = ok && std::abs(slope - 4.0) <= 0.5;
  detail += "in [3.2,4.8]; r=4 slope=" + fmt(slope) + " (4 +- 0.5)";
  return {ok, detail};
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome criterion3() {
  const fs::path dir = fs::temp_directory_path() / "qfruit_acceptance_c3";
  fs::remove_all(dir);
  fs::create_directories(dir);
  bool ok = true;
  std::string detail;
  double worst_gap = 0;
  for (int door : {0, 2}) {
    double prev = 1e9;
    detail += "d=" + std::to_string(door) + " errors:";
    for (int nt_meta : {1, 2, 4}) {
      const std::string prefix =
          (dir / ("d" + std::to_string(door) + "_m" + std::to_string(nt_meta))).string();
      std::ostringstream out, err;
      const int status = run_cli(
          {"qfruit", "--prefix", prefix, "--line-qubits", "3", "--tree-qubits", "3",
           "--coupling", "0.2", "--door", std::to_string(door), "--bands", "0,3",
           "--line-order", "2", "--meta-order", "2", "--line-trots", "4",
           "--tree-trots", "4", "--meta-trots", std::to_string(nt_meta)},
          out, err);
      if (status != 0) return {false, "CLI failed: " + out.str()};
      const auto text = out.str();
      const auto at = text.find("Error: ");
      const double reported = std::stod(text.substr(at + 7));

      // Independent recomputation from the written English file.
      const SeoProgram parsed = parse_english(prefix + "_qfru_eng.txt");
      SeoProgram flat(parsed.num_qubits);
      for (const auto& g : expand(parsed)) flat.add(g);
      FruitSpec s;
      s.file_prefix = "c3";
      s.nb_line = s.nb_tree = 3;
      s.g = 0.2;
      s.door = door;
      s.bands_text = "0,3";
      const auto h = assemble_fruit(s);
      const double recomputed = frobenius_distance(
          expi_hermitian(h.fruit), oracle::unitary(expand(parsed), parsed.num_qubits));
      const double recomputed_flat = verify_compile(h.fruit, flat);
      worst_gap = std::max({worst_gap, std::abs(reported - recomputed),
                            std::abs(reported - recomputed_flat)});
      ok = ok && reported < prev;
      prev = reported;
      detail += " " + fmt(reported);
    }
    detail += "; ";
  }
  fs::remove_all(dir);
  ok = ok && worst_gap <= 1e-12;
  return {ok, detail + "max |reported - recomputed| = " + fmt(worst_gap) +
                  " (tol 1e-12), strictly decreasing in nt_meta"};
}

Outcome criterion4(const std::vector<Instance>& instances) {
  std::size_t nonzero = 0;
  for (const auto& inst : instances) {
    const auto line = oracle::dense(inst.h.line);
    const auto tree = oracle::dense(inst.h.tree);
    const auto glue = oracle::dense(inst.h.glue);
    const auto ora = oracle::dense(inst.h.oracle);
    const Eigen::MatrixXd c1 = line * tree - tree * line;
    const Eigen::MatrixXd c2 = glue * ora - ora * glue;
    if (c1.cwiseAbs().maxCoeff() != 0.0 || c2.cwiseAbs().maxCoeff() != 0.0) ++nonzero;
  }
  return {nonzero == 0, std::to_string(instances.size()) +
                            " instances, commutators exactly zero in " +
                            std::to_string(instances.size() - nonzero)};
}

Outcome criterion5() {
  std::mt19937_64 rng(55);
  std::size_t bad = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 5;
    const auto p = oracle::random_program(rng, n, 2 + trial % 10, 3);
    const auto eng = english_text(p);
    const auto pic = picture_text(p);
    const auto back = parse_english_text(eng);
    const bool same = expand(back) == expand(p);
    const bool lines = std::count(eng.begin(), eng.end(), '\n') ==
                       std::count(pic.begin(), pic.end(), '\n');
    const bool count = count_elementary_ops(p) == expand(p).size() &&
                       count_elementary_ops(back) == expand(p).size();
    if (!(same && lines && count)) ++bad;
  }
  SeoProgram spot(2), inner(2);
  spot.add(Gate::sigx(0)).add(Gate::sigx(1));
  inner.add(Gate::sigx(0)).add(Gate::sigx(1)).add(Gate::sigx(0));
  spot.add_loop(0, 5, inner);
  const auto spot_count = count_elementary_ops(spot);
  return {bad == 0 && spot_count == 17,
          "50 programs, " + std::to_string(bad) + " mismatches; spot count " +
              std::to_string(spot_count) + " (expect 17)"};
}

Outcome criterion6() {
  const std::vector<std::tuple<int, int, int>> cases{{3, 3, 5}, {2, 3, 4}, {1, 2, 3}};
  bool ok = true;
  std::string detail;
  for (auto [nl, nt, expect] : cases) {
    const StateIndex need = (StateIndex{1} << nl) + 3 * (StateIndex{1} << (nt - 1));
    int minimal = -1;
    for (int n = 0; n < 64 && minimal < 0; ++n)
      if (need <= (StateIndex{1} << n)) minimal = n;
    const int got = num_qubits_required(nl, nt);
    ok = ok && got == expect && got == minimal;
    detail += "(" + std::to_string(nl) + "," + std::to_string(nt) + ")->" +
              std::to_string(got) + " ";
  }
  return {ok, detail + "matches minimal search"};
}

Outcome criterion7() {
  std::mt19937_64 rng(7777);
  std::normal_distribution<double> d;
  std::size_t violations = 0;
  double worst_formula = 0;
  for (int trial = 0; trial < 100; ++trial) {
    DenseMatrix a(8, 8);
    for (int j = 0; j < 8; ++j)
      for (int k = 0; k < 8; ++k) a(j, k) = {d(rng), d(rng)};
    double sum = 0;
    for (int j = 0; j < 8; ++j)
      for (int k = 0; k < 8; ++k) sum += (a(j, k) * std::conj(a(j, k))).real();
    worst_formula = std::max(worst_formula, std::abs(frobenius_norm(a) - std::sqrt(sum)));
    if (spectral_norm(a) > frobenius_norm(a)) ++violations;
  }
  return {violations == 0 && worst_formula <= 1e-12,
          "100 matrices, " + std::to_string(violations) +
              " violations of ||A||_2 <= ||A||_F; elementwise formula gap " +
              fmt(worst_formula)};
}

Outcome criterion8() {
  const auto layout = FruitLayout::make(3, 3);
  const int n = layout.nb_total;
  const auto block = compile_line(3, 0.5, 2, 2);
  const DenseMatrix u_block = program_unitary(block);
  const double block_err =
      frobenius_distance(u_block, expi_hermitian(build_line_hamiltonian(3, 0.5)));
  double worst_place = 0, worst_err_gap = 0;
  for (StateIndex offset : {StateIndex{0}, StateIndex{3}, layout.tree_offset,
                            layout.extra_offset, layout.ns_total - layout.ns_line}) {
    const auto embedded = embed_block(block, offset, n);
    const DenseMatrix u = program_unitary(embedded);
    DenseMatrix expect = DenseMatrix::Identity(u.rows(), u.cols());
    expect.block(static_cast<Eigen::Index>(offset), static_cast<Eigen::Index>(offset),
                 u_block.rows(), u_block.cols()) = u_block;
    worst_place = std::max(worst_place, frobenius_distance(u, expect));
    const double err = frobenius_distance(
        u, expi_hermitian(build_line_hamiltonian(3, 0.5).embedded(layout.ns_total, offset)));
    worst_err_gap = std::max(worst_err_gap, std::abs(err - block_err));
  }
  return {worst_place <= 1e-12 && worst_err_gap <= 1e-12,
          "max ||U - diag(I, U_block, I)||_F = " + fmt(worst_place) +
              ", max |err_embedded - err_block| = " + fmt(worst_err_gap) +
              " (tol 1e-12)"};
}

}  // namespace

int main() {
  const auto start = Clock::now();
  const auto instances = grid();
  const double grid_secs = std::chrono::duration<double>(Clock::now() - start).count();
  std::printf("grid: %zu assembled instances in %.2fs\n", instances.size(), grid_secs);

  report(1, "exact glue/oracle/shift compilations", 60,
         [&] { return criterion1(instances); });
  report(2, "Trotter order law for the line", 60, criterion2);
  report(3, "end-to-end fruit error and convergence", 120, criterion3);
  report(4, "commutation of line/tree and glue/oracle", 60,
         [&] { return criterion4(instances); });
  report(5, "English file round-trip and op counting", 60, criterion5);
  report(6, "qubit-count formula", 60, criterion6);
  report(7, "norm relations", 60, criterion7);
  report(8, "padding and shift embedding", 60, criterion8);

  std::printf("%s: %d criterion(s) failed\n", failures ? "FAILED" : "ALL PASSED",
              failures);
  return failures ? 1 : 0;
}
