// Copyright 2026 The qsplit Authors
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
#include "qsplit/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "qsplit/density.hpp"
#include "qsplit/gates.hpp"

namespace qsplit::oracle {

// ---------------------------------------------------------------- matrices

DenseMatrix DenseMatrix::identity(std::size_t dim) {
  DenseMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::from_operator(const Operator& op) {
  DenseMatrix m(op.dim());
  for (std::size_t r = 0; r < op.dim(); ++r)
    for (std::size_t c = 0; c < op.dim(); ++c) m(r, c) = op(r, c);
  return m;
}

DenseMatrix DenseMatrix::kron(const DenseMatrix& rhs) const {
  DenseMatrix out(dim_ * rhs.dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      const cx a = (*this)(i, j);
      if (a == cx{}) continue;
      for (std::size_t r = 0; r < rhs.dim_; ++r)
        for (std::size_t c = 0; c < rhs.dim_; ++c)
          out(i * rhs.dim_ + r, j * rhs.dim_ + c) = a * rhs(r, c);
    }
  return out;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& rhs) const {
  if (rhs.dim_ != dim_) throw std::invalid_argument("DenseMatrix: dimension mismatch");
  DenseMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t k = 0; k < dim_; ++k) {
      const cx a = (*this)(i, k);
      if (a == cx{}) continue;
      for (std::size_t j = 0; j < dim_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

std::vector<cx> DenseMatrix::apply(const std::vector<cx>& v) const {
  if (v.size() != dim_) throw std::invalid_argument("DenseMatrix: vector length mismatch");
  std::vector<cx> out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    cx acc = 0.0;
    for (std::size_t j = 0; j < dim_; ++j) acc += (*this)(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

namespace {

std::size_t power(int d, int n) {
  std::size_t p = 1;
  for (int i = 0; i < n; ++i) p *= static_cast<std::size_t>(d);
  return p;
}

cx phase_of(int d, long long numerator) {
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(numerator) / d);
}

std::vector<cx> kron(const std::vector<cx>& a, const std::vector<cx>& b) {
  std::vector<cx> out;
  out.reserve(a.size() * b.size());
  for (const cx& x : a)
    for (const cx& y : b) out.push_back(x * y);
  return out;
}

std::vector<cx> amplitudes_of(const QuditRegister& reg) {
  return {reg.amplitudes().begin(), reg.amplitudes().end()};
}

std::vector<cx> shared_vector(const SecretAmplitudes& secret, int parties) {
  const int d = secret.dim();
  std::vector<cx> v(power(d, parties));
  for (int k = 0; k < d; ++k) {
    std::size_t idx = 0;
    for (int p = 0; p < parties; ++p) idx = idx * static_cast<std::size_t>(d) + k;
    v[idx] = secret[k];
  }
  return v;
}

double deviation(const std::vector<cx>& a, std::span<const cx> b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

double deviation_up_to_phase(const std::vector<cx>& a, const std::vector<cx>& b) {
  std::size_t anchor = 0;
  for (std::size_t i = 1; i < a.size(); ++i)
    if (std::abs(a[i]) > std::abs(a[anchor])) anchor = i;
  cx align = 1.0;
  if (std::abs(b[anchor]) > 0.0) {
    const cx ratio = a[anchor] / b[anchor];
    align = ratio / std::abs(ratio);
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - align * b[i]));
  return worst;
}

double overlap_squared(std::span<const cx> a, const std::vector<cx>& b) {
  cx acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return std::norm(acc);
}

// Every digit tuple in [0,d)^len, lexicographic.
std::vector<Digits> all_tuples(int d, int len) {
  std::vector<Digits> out{Digits{}};
  for (int i = 0; i < len; ++i) {
    std::vector<Digits> next;
    for (const Digits& t : out)
      for (int v = 0; v < d; ++v) {
        Digits e = t;
        e.push_back(v);
        next.push_back(std::move(e));
      }
    out = std::move(next);
  }
  return out;
}

Digits digits_of(int d, int n, std::size_t idx) {
  Digits digits(static_cast<std::size_t>(n));
  for (int p = n - 1; p >= 0; --p) {
    digits[static_cast<std::size_t>(p)] = static_cast<int>(idx % static_cast<std::size_t>(d));
    idx /= static_cast<std::size_t>(d);
  }
  return digits;
}

}  // namespace

DenseMatrix embed_single(int d, int n, const DenseMatrix& u, int pos) {
  return DenseMatrix::identity(power(d, pos))
      .kron(u)
      .kron(DenseMatrix::identity(power(d, n - pos - 1)));
}

DenseMatrix embed_pair(int d, int n, const DenseMatrix& u, int first, int second) {
  const std::size_t len = power(d, n);
  DenseMatrix out(len);
  for (std::size_t row = 0; row < len; ++row) {
    const Digits rd = digits_of(d, n, row);
    for (std::size_t col = 0; col < len; ++col) {
      const Digits cd = digits_of(d, n, col);
      bool spectators_match = true;
      for (int p = 0; p < n && spectators_match; ++p)
        if (p != first && p != second && rd[static_cast<std::size_t>(p)] != cd[static_cast<std::size_t>(p)])
          spectators_match = false;
      if (!spectators_match) continue;
      const std::size_t ur = static_cast<std::size_t>(rd[static_cast<std::size_t>(first)] * d +
                                                      rd[static_cast<std::size_t>(second)]);
      const std::size_t uc = static_cast<std::size_t>(cd[static_cast<std::size_t>(first)] * d +
                                                      cd[static_cast<std::size_t>(second)]);
      out(row, col) = u(ur, uc);
    }
  }
  return out;
}

DenseMatrix qft_matrix(int d) {
  DenseMatrix m(static_cast<std::size_t>(d));
  const double s = 1.0 / std::sqrt(static_cast<double>(d));
  for (int k = 0; k < d; ++k)
    for (int j = 0; j < d; ++j) m(k, j) = s * phase_of(d, static_cast<long long>(j) * k);
  return m;
}

DenseMatrix xor_matrix(int d) {
  const auto dd = static_cast<std::size_t>(d);
  DenseMatrix m(dd * dd);
  for (std::size_t j = 0; j < dd; ++j)
    for (std::size_t k = 0; k < dd; ++k) m(j * dd + (j + k) % dd, j * dd + k) = 1.0;
  return m;
}

DenseMatrix bob1_correction_matrix(int d, int l, int m) {
  // Column r (input |r>) holds exp(−i2πkl/d) at row k = (m − r) mod d.
  DenseMatrix u(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) {
    const int r = ((m - k) % d + d) % d;
    u(k, r) = phase_of(d, -static_cast<long long>(k) * l);
  }
  return u;
}

DenseMatrix relabel_matrix(int d, int m) { return bob1_correction_matrix(d, 0, m); }

DenseMatrix phase_matrix(int d, long long k) {
  DenseMatrix u(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) u(j, j) = phase_of(d, -static_cast<long long>(j) * k);
  return u;
}

DenseBranch dense_collapse(int d, int n, const std::vector<cx>& state,
                           const std::vector<int>& targets, const Digits& outcome) {
  std::vector<cx> kept;
  double p = 0.0;
  for (std::size_t idx = 0; idx < state.size(); ++idx) {
    const Digits digits = digits_of(d, n, idx);
    bool match = true;
    for (std::size_t t = 0; t < targets.size(); ++t)
      if (digits[static_cast<std::size_t>(targets[t])] != outcome[t]) match = false;
    if (!match) continue;
    kept.push_back(state[idx]);
    p += std::norm(state[idx]);
  }
  if (p > 0.0) {
    const double inv = 1.0 / std::sqrt(p);
    for (cx& a : kept) a *= inv;
  }
  return {std::move(kept), p};
}

// ---------------------------------------------------------------- checks

bool DenseCheckReport::passed() const {
  return min_fidelity >= 1.0 - kFidelityTol && max_split_probability_error <= kAlgebraTol &&
         max_reconstruction_probability_error <= kAlgebraTol &&
         max_universality_deviation <= kAlgebraTol && max_fast_path_deviation <= kAlgebraTol;
}

DenseCheckReport dense_protocol_check(const SecretAmplitudes& secret, int n,
                                      ReconstructionMode mode, std::size_t cap) {
  const int d = secret.dim();
  if (n < 1) throw std::invalid_argument("dense_protocol_check: N must be >= 1");
  checked_length(d, n + 2, cap);

  DenseCheckReport report;
  report.d = d;
  report.n = n;
  report.mode = mode;

  // Step 1 as one dense unitary on |Ψ> ⊗ GHZ.
  std::vector<cx> ghz(power(d, n + 1));
  for (int j = 0; j < d; ++j) {
    std::size_t idx = 0;
    for (int p = 0; p <= n; ++p) idx = idx * static_cast<std::size_t>(d) + j;
    ghz[idx] = 1.0 / std::sqrt(static_cast<double>(d));
  }
  const std::vector<cx> joint = kron(amplitudes_of(secret.as_register()), ghz);
  const DenseMatrix step1 = embed_single(d, n + 2, qft_matrix(d), 0) *
                            embed_pair(d, n + 2, xor_matrix(d), 0, n + 1);
  const std::vector<cx> encoded = step1.apply(joint);

  // Reconstruction operators, per remaining holder count K.
  std::vector<DenseMatrix> qft_last;  // index K
  std::vector<std::vector<DenseMatrix>> phase_first;  // [K][k] on K qudits
  for (int k_parties = 0; k_parties <= n; ++k_parties) {
    if (k_parties < 1) {
      qft_last.emplace_back(1);
      phase_first.emplace_back();
      continue;
    }
    qft_last.push_back(embed_single(d, k_parties, qft_matrix(d), k_parties - 1));
    std::vector<DenseMatrix> phases;
    for (int k = 0; k < d; ++k) phases.push_back(embed_single(d, k_parties, phase_matrix(d, k), 0));
    phase_first.push_back(std::move(phases));
  }
  DenseMatrix qft_all_but_first = DenseMatrix::identity(static_cast<std::size_t>(d));
  for (int mu = 2; mu <= n; ++mu) qft_all_but_first = qft_all_but_first.kron(qft_matrix(d));

  const std::vector<cx> target_qss = shared_vector(secret, n);
  const double split_p = 1.0 / static_cast<double>(d * d);
  const auto tuples = all_tuples(d, n - 1);

  for (int l = 0; l < d; ++l)
    for (int m = 0; m < d; ++m) {
      DenseBranch branch = dense_collapse(d, n + 2, encoded, {0, n + 1}, {l, m});
      report.split_probabilities[{l, m}] = branch.probability;
      report.max_split_probability_error =
          std::max(report.max_split_probability_error, std::abs(branch.probability - split_p));

      DenseMatrix corr = bob1_correction_matrix(d, l, m);
      for (int mu = 2; mu <= n; ++mu) corr = corr.kron(relabel_matrix(d, m));
      const std::vector<cx> qss = corr.apply(branch.state);
      report.max_universality_deviation =
          std::max(report.max_universality_deviation, deviation_up_to_phase(target_qss, qss));

      // Fast path for the same branch.
      OutcomeSource split_source = OutcomeSource::forced({l, m});
      SplitResult fast = split(prepare_joint(secret, n), n, split_source);
      report.max_fast_path_deviation = std::max(
          report.max_fast_path_deviation, deviation(branch.state, fast.branch.amplitudes()));
      const QuditRegister fast_qss = apply_corrections(fast.branch, l, m);
      report.max_fast_path_deviation =
          std::max(report.max_fast_path_deviation, deviation(qss, fast_qss.amplitudes()));

      for (const Digits& ks : tuples) {
        std::vector<cx> state = qss;
        if (mode == ReconstructionMode::kSequential) {
          for (int i = 0, k_parties = n; k_parties >= 2; ++i, --k_parties) {
            state = qft_last[static_cast<std::size_t>(k_parties)].apply(state);
            const int k = ks[static_cast<std::size_t>(i)];
            DenseBranch b = dense_collapse(d, k_parties, state, {k_parties - 1}, {k});
            report.max_reconstruction_probability_error =
                std::max(report.max_reconstruction_probability_error,
                         std::abs(b.probability - 1.0 / d));
            state = phase_first[static_cast<std::size_t>(k_parties - 1)]
                               [static_cast<std::size_t>(k)]
                                   .apply(b.state);
          }
        } else if (n >= 2) {
          state = qft_all_but_first.apply(state);
          std::vector<int> targets;
          long long k_sum = 0;
          for (int mu = n; mu >= 2; --mu) targets.push_back(mu - 1);
          for (int k : ks) k_sum += k;
          DenseBranch b = dense_collapse(d, n, state, targets, ks);
          report.max_reconstruction_probability_error =
              std::max(report.max_reconstruction_probability_error,
                       std::abs(b.probability - 1.0 / static_cast<double>(power(d, n - 1))));
          state = phase_matrix(d, k_sum).apply(b.state);
        }

        OutcomeSource recon_source = OutcomeSource::forced(ks);
        const ReconstructResult fast_r =
            mode == ReconstructionMode::kSequential
                ? reconstruct_sequential(fast_qss, recon_source)
                : reconstruct_parallel(fast_qss, recon_source);
        report.max_fast_path_deviation =
            std::max(report.max_fast_path_deviation, deviation(state, fast_r.secret.amplitudes()));

        const double f = overlap_squared(secret.alphas(), state);
        report.min_fidelity = std::min(report.min_fidelity, f);
        report.max_fidelity = std::max(report.max_fidelity, f);
        ++report.branches;
      }
    }
  return report;
}

QubitFixtureReport qubit_fixture_check(cx a, cx b) {
  const SecretAmplitudes secret({a, b});
  a = secret[0];
  b = secret[1];
  QubitFixtureReport report{a, b};

  auto pair_state = [](cx c00, cx c11) { return std::vector<cx>{c00, 0.0, 0.0, c11}; };
  // (l, m) -> literal two-qubit branch state.
  const std::vector<cx> expected[2][2] = {
      {pair_state(a, b), pair_state(b, a)},
      {pair_state(a, -b), pair_state(-b, a)},
  };

  for (int l = 0; l < 2; ++l)
    for (int m = 0; m < 2; ++m) {
      OutcomeSource source = OutcomeSource::forced({l, m});
      SplitResult s = split(prepare_joint(secret, 2), 2, source);
      report.max_deviation = std::max(
          report.max_deviation,
          deviation_up_to_phase(expected[l][m], amplitudes_of(s.branch)));
      ++report.checks;

      // Bob_2's Hadamard and measurement, before Bob_1's phase fix.
      const QuditRegister qss = apply_corrections(std::move(s.branch), l, m);
      const QuditRegister rotated = qft_apply(qss, 1);
      for (int k = 0; k < 2; ++k) {
        const int targets[] = {1};
        const int outcome[] = {k};
        const Collapsed c = collapse(rotated, targets, outcome);
        const std::vector<cx> literal = {a, k == 0 ? b : -b};
        report.max_deviation =
            std::max(report.max_deviation, deviation_up_to_phase(literal, amplitudes_of(c.remaining)));
        ++report.checks;
      }
    }
  return report;
}

MarginalSweepReport marginal_sweep(const SecretAmplitudes& secret, int n, std::size_t cap) {
  const int d = secret.dim();
  checked_length(d, n + 2, cap);
  MarginalSweepReport report;
  report.d = d;
  report.n = n;

  auto check = [&](const QuditRegister& qss) {
    const int k_parties = qss.qudits();
    const std::vector<cx> psi = amplitudes_of(qss);
    for (unsigned mask = 1; mask + 1 < (1u << k_parties); ++mask) {
      std::vector<int> keep;
      for (int p = 0; p < k_parties; ++p)
        if (mask & (1u << p)) keep.push_back(p);
      const int s = static_cast<int>(keep.size());
      const DensityMatrix expected = expected_subset_marginal(secret, s);
      report.max_deviation =
          std::max(report.max_deviation, max_entry_deviation(reduced_density(qss, keep), expected));

      // Brute force: pair every two basis indices that agree off the subset.
      const std::size_t kept_dim = power(d, s);
      std::vector<cx> rho(kept_dim * kept_dim);
      for (std::size_t i = 0; i < psi.size(); ++i) {
        const Digits di = digits_of(d, k_parties, i);
        for (std::size_t j = 0; j < psi.size(); ++j) {
          const Digits dj = digits_of(d, k_parties, j);
          bool agree = true;
          for (int p = 0; p < k_parties && agree; ++p)
            if (!(mask & (1u << p)) && di[static_cast<std::size_t>(p)] != dj[static_cast<std::size_t>(p)])
              agree = false;
          if (!agree) continue;
          std::size_t ri = 0;
          std::size_t rj = 0;
          for (int p : keep) {
            ri = ri * static_cast<std::size_t>(d) + static_cast<std::size_t>(di[static_cast<std::size_t>(p)]);
            rj = rj * static_cast<std::size_t>(d) + static_cast<std::size_t>(dj[static_cast<std::size_t>(p)]);
          }
          rho[ri * kept_dim + rj] += psi[i] * std::conj(psi[j]);
        }
      }
      report.max_oracle_deviation = std::max(report.max_oracle_deviation,
                                             deviation(rho, expected.entries()));
      ++report.subsets_checked;
    }
  };

  for (int l = 0; l < d; ++l)
    for (int m = 0; m < d; ++m) {
      OutcomeSource source = OutcomeSource::forced({l, m});
      SplitResult s = split(prepare_joint(secret, n, cap), n, source);
      QuditRegister qss = apply_corrections(std::move(s.branch), l, m);
      while (qss.qudits() >= 2) {
        check(qss);
        OutcomeSource step_source = OutcomeSource::forced({(l + m + qss.qudits()) % d});
        qss = reconstruct_step(std::move(qss), step_source).reduced;
      }
    }
  return report;
}

std::vector<SecretAmplitudes> reference_secrets(int d) {
  std::vector<cx> ramp(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) ramp[static_cast<std::size_t>(k)] = std::polar(k + 1.0, 0.7 * (k + 1) * (k + 1));
  return {SecretAmplitudes::basis(d, 0), SecretAmplitudes::basis(d, d - 1),
          SecretAmplitudes::uniform(d), SecretAmplitudes(std::move(ramp))};
}

}  // namespace qsplit::oracle
