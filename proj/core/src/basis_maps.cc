// Copyright 2026 The Topomap Authors
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

#include "topomap/basis_maps.h"

#include <cmath>
#include <map>
#include <string>

#include "topomap/errors.h"

namespace topomap {
namespace {

std::string join(const std::vector<std::size_t>& xs, const Basis& b) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) s += ", ";
    s += b.label_text(xs[i]);
  }
  return s;
}

std::string duplicate_images(const FiniteFunction& f) {
  std::vector<std::size_t> dup;
  for (std::size_t y = 0; y < f.codomain_size(); ++y) {
    if (f.stats().multiplicities[y] > 1) dup.push_back(y);
  }
  return join(dup, *f.codomain());
}

void require_surjective(const FiniteFunction& f, std::string_view what) {
  if (!f.is_surjective()) {
    throw PreconditionError(std::string(what) +
                            " requires a surjective function; range misses " +
                            join(f.non_range(), *f.codomain()));
  }
}

}  // namespace

BasisMapOperator sum_components(const std::vector<KernelComponent>& parts) {
  if (parts.empty()) throw PreconditionError("no kernel components to sum");
  BasisMapOperator total = parts.front().op;
  for (std::size_t i = 1; i < parts.size(); ++i) total = total + parts[i].op;
  return total;
}

SurjectionDecomposition preimage_decomposition(const FiniteFunction& f) {
  const auto n = static_cast<Eigen::Index>(f.domain_size());
  const Basis::Ptr& domain = f.domain();
  SurjectionDecomposition d;
  for (std::size_t y : f.range()) {
    const auto block = f.preimage(y);
    const double scale = 1.0 / std::sqrt(static_cast<double>(block.size()));
    Eigen::VectorXcd u = Eigen::VectorXcd::Zero(n);
    for (std::size_t x : block) u[static_cast<Eigen::Index>(x)] = scale;
    d.range.push_back(y);
    d.multiplicities.push_back(block.size());
    d.nonnull.emplace_back(domain, std::move(u));

    // Gram-Schmidt over |x_first> - |x_t>, t = 2..k, within this block.
    std::vector<Eigen::VectorXd> local;
    for (std::size_t t = 1; t < block.size(); ++t) {
      Eigen::VectorXd w = Eigen::VectorXd::Zero(n);
      w[static_cast<Eigen::Index>(block.front())] = 1.0;
      w[static_cast<Eigen::Index>(block[t])] = -1.0;
      for (const auto& q : local) w -= q.dot(w) * q;
      w /= w.norm();
      local.push_back(w);
    }
    for (const auto& q : local) {
      d.null.emplace_back(domain, q.cast<Complex>());
    }
  }
  return d;
}

SurjectionDecomposition surjection_decomposition(const FiniteFunction& f) {
  require_surjective(f, "surjection decomposition");
  auto d = preimage_decomposition(f);
  for (std::size_t k = 0; k < d.null.size(); ++k) {
    d.garbage.push_back(f.codomain_size() + k);
  }
  return d;
}

BasisMapOperator bijection_kernel(const FiniteFunction& f) {
  if (!f.is_bijective()) {
    std::string why;
    if (!f.is_injective()) {
      why = "not injective (repeated images: " + duplicate_images(f) + ")";
    } else {
      why = "not surjective (range misses " + join(f.non_range(), *f.codomain()) + ")";
    }
    throw PreconditionError("bijection kernel requires a bijective function; f is " + why);
  }
  std::vector<MatrixEntry> entries;
  for (std::size_t x = 0; x < f.domain_size(); ++x) {
    entries.push_back({f(x), x, 1.0});
  }
  return BasisMapOperator::from_entries(f.domain(), f.codomain(), entries);
}

std::vector<KernelComponent> injection_components(const FiniteFunction& f) {
  const std::size_t n = f.domain_size();
  const std::size_t m = f.codomain_size();
  if (!f.is_injective()) {
    throw PreconditionError(
        "injection kernel requires an injective function; repeated images: " +
        duplicate_images(f));
  }
  if (n >= m) {
    throw PreconditionError(
        "injection kernel requires a non-surjective injection (n < m); f is "
        "bijective, use the bijection kernel");
  }
  // H_C reuses the codomain labels (w_i = y_i) and H_G the domain labels.
  const auto in = Basis::tensor(f.domain(), f.codomain());
  const auto out = Basis::tensor(f.codomain(), f.domain());
  auto in_index = [m](std::size_t x, std::size_t w) { return x * m + w; };
  auto out_index = [n](std::size_t y, std::size_t v) { return y * n + v; };

  std::vector<MatrixEntry> t, s, r, q;
  for (std::size_t j = 0; j < n; ++j) {
    t.push_back({out_index(f(j), 0), in_index(j, 0), 1.0});
  }
  const auto z = f.non_range();
  for (std::size_t i = 0; i < z.size(); ++i) {
    s.push_back({out_index(z[i], 0), in_index(0, i + 1), 1.0});
  }
  for (std::size_t i = 1; i < m; ++i) {
    for (std::size_t j = 1; j < n; ++j) {
      r.push_back({out_index(i, j), in_index(j, i), 1.0});
    }
  }
  // x1 (x) w_{m_nr+1+j} -> y1 (x) v_{j+1}: the ancilla slots after S's.
  for (std::size_t j = 1; j < n; ++j) {
    q.push_back({out_index(0, j), in_index(0, z.size() + j), 1.0});
  }

  std::vector<KernelComponent> parts;
  auto add = [&](std::string name, std::vector<MatrixEntry> e) {
    const std::size_t count = e.size();
    parts.push_back({std::move(name), count,
                     BasisMapOperator::from_entries(in, out, e)});
  };
  add("T", std::move(t));
  add("S", std::move(s));
  add("R", std::move(r));
  add("Q", std::move(q));
  return parts;
}

BasisMapOperator injection_unitary(const FiniteFunction& f) {
  return sum_components(injection_components(f));
}

std::vector<KernelComponent> surjection_components(const FiniteFunction& f) {
  const auto d = surjection_decomposition(f);
  const std::size_t m = f.codomain_size();
  auto labels = f.codomain_labels();
  std::vector<std::optional<std::size_t>> values;
  for (std::size_t y = 0; y < m; ++y) values.emplace_back(y);
  for (std::size_t k = 0; k < d.null.size(); ++k) {
    labels.push_back(std::string(kGarbagePrefix) + std::to_string(k + 1) + ">");
    values.emplace_back(std::nullopt);
  }
  const auto out = Basis::from_labels(std::move(labels), std::move(values));

  std::vector<MatrixEntry> mm, nn;
  for (std::size_t i = 0; i < d.range.size(); ++i) {
    const auto& u = d.nonnull[i].amplitudes();
    for (Eigen::Index x = 0; x < u.size(); ++x) {
      if (u[x] != Complex(0.0)) {
        mm.push_back({d.range[i], static_cast<std::size_t>(x), std::conj(u[x])});
      }
    }
  }
  for (std::size_t k = 0; k < d.null.size(); ++k) {
    const auto& v = d.null[k].amplitudes();
    for (Eigen::Index x = 0; x < v.size(); ++x) {
      if (v[x] != Complex(0.0)) {
        nn.push_back({d.garbage[k], static_cast<std::size_t>(x), std::conj(v[x])});
      }
    }
  }
  std::vector<KernelComponent> parts;
  parts.push_back({"M", d.range.size(),
                   BasisMapOperator::from_entries(f.domain(), out, mm)});
  parts.push_back({"N", d.null.size(),
                   BasisMapOperator::from_entries(f.domain(), out, nn)});
  return parts;
}

BasisMapOperator surjection_unitary(const FiniteFunction& f) {
  return sum_components(surjection_components(f));
}

Basis::Ptr extended_domain(const FiniteFunction& f) {
  std::vector<std::string> labels{std::string(kExtraDomainLabel)};
  std::vector<std::optional<std::size_t>> values{std::nullopt};
  for (std::size_t x = 0; x < f.domain_size(); ++x) {
    labels.push_back(f.domain()->label_text(x));
    values.emplace_back(x);
  }
  return Basis::from_labels(std::move(labels), std::move(values));
}

Basis::Ptr extended_codomain(const FiniteFunction& f) {
  std::vector<std::string> labels{std::string(kExtraCodomainLabel)};
  std::vector<std::optional<std::size_t>> values{std::nullopt};
  for (std::size_t y = 0; y < f.codomain_size(); ++y) {
    labels.push_back(f.codomain()->label_text(y));
    values.emplace_back(y);
  }
  return Basis::from_labels(std::move(labels), std::move(values));
}

std::vector<KernelComponent> arbitrary_components(const FiniteFunction& f) {
  const std::size_t n = f.domain_size();
  const std::size_t m = f.codomain_size();
  const auto d = preimage_decomposition(f);
  const auto ext_dom = extended_domain(f);
  const auto ext_cod = extended_codomain(f);
  const auto in = Basis::tensor(ext_dom, ext_cod);
  const auto out = Basis::tensor(ext_cod, ext_dom);
  // Ordinal 0 of each extended factor is x0 / y0.
  auto in_index = [m](std::size_t a, std::size_t b) { return a * (m + 1) + b; };
  auto out_index = [n](std::size_t c, std::size_t e) { return c * (n + 1) + e; };

  const std::size_t m_r = d.range.size();
  const std::size_t n_o = d.null.size();
  const auto z = f.non_range();

  std::vector<MatrixEntry> mm, nn, ss, rr, qq, pp;
  for (std::size_t i = 0; i < m_r; ++i) {
    const auto& u = d.nonnull[i].amplitudes();
    for (Eigen::Index x = 0; x < u.size(); ++x) {
      if (u[x] != Complex(0.0)) {
        mm.push_back({out_index(d.range[i] + 1, 0),
                      in_index(static_cast<std::size_t>(x) + 1, 0), std::conj(u[x])});
      }
    }
  }
  for (std::size_t k = 0; k < n_o; ++k) {
    const auto& v = d.null[k].amplitudes();
    for (Eigen::Index x = 0; x < v.size(); ++x) {
      if (v[x] != Complex(0.0)) {
        nn.push_back({out_index(0, k + 1),
                      in_index(static_cast<std::size_t>(x) + 1, 0), std::conj(v[x])});
      }
    }
  }
  for (std::size_t i = 0; i < z.size(); ++i) {
    ss.push_back({out_index(z[i] + 1, 0), in_index(0, i + 1), 1.0});
  }
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      rr.push_back({out_index(i, j), in_index(j, i), 1.0});
    }
  }
  for (std::size_t k = 1; k <= m_r; ++k) {
    qq.push_back({out_index(0, n_o + k), in_index(0, z.size() + k), 1.0});
  }
  pp.push_back({out_index(0, 0), in_index(0, 0), 1.0});

  std::vector<KernelComponent> parts;
  auto add = [&](std::string name, std::size_t mapped,
                 const std::vector<MatrixEntry>& e) {
    parts.push_back({std::move(name), mapped,
                     BasisMapOperator::from_entries(in, out, e)});
  };
  add("M", m_r, mm);
  add("N", n_o, nn);
  add("S", z.size(), ss);
  add("R", m * n, rr);
  add("Q", m_r, qq);
  add("P", 1, pp);
  return parts;
}

BasisMapOperator arbitrary_unitary(const FiniteFunction& f) {
  return sum_components(arbitrary_components(f));
}

AmplitudeVector injection_input(const FiniteFunction& f,
                                const AmplitudeVector& v) {
  if (!same_basis(v.basis_ptr(), f.domain())) {
    throw BasisError("injection input must live on the function domain");
  }
  return tensor(v, AmplitudeVector::basis_vector(f.codomain(), 0));
}

AmplitudeVector arbitrary_input(const FiniteFunction& f,
                                const AmplitudeVector& v, Complex t) {
  if (!same_basis(v.basis_ptr(), f.domain())) {
    throw BasisError("arbitrary-kernel input must live on the function domain");
  }
  const auto ext_dom = extended_domain(f);
  Eigen::VectorXcd amps(static_cast<Eigen::Index>(ext_dom->dim()));
  amps[0] = t;
  amps.tail(v.amplitudes().size()) = v.amplitudes();
  AmplitudeVector first(ext_dom, std::move(amps));
  return tensor(first, AmplitudeVector::basis_vector(extended_codomain(f), 0));
}

AmplitudeVector represent_set(const std::set<std::size_t>& members,
                              const Basis::Ptr& space) {
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(space->dim()));
  if (!members.empty()) {
    const double a = 1.0 / std::sqrt(static_cast<double>(members.size()));
    for (std::size_t x : members) {
      if (x >= space->dim()) {
        throw BasisError("set member ordinal " + std::to_string(x) +
                         " outside a space of dimension " +
                         std::to_string(space->dim()));
      }
      amps[static_cast<Eigen::Index>(x)] = a;
    }
  }
  return AmplitudeVector(space, std::move(amps));
}

std::set<std::size_t> extract_set(const AmplitudeVector& v, double threshold) {
  if (!(threshold > 0.0)) {
    throw PreconditionError("extract_set threshold must be positive");
  }
  std::map<std::size_t, double> weight;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (auto value = v.basis().value(i)) weight[*value] += std::norm(v[i]);
  }
  std::set<std::size_t> out;
  for (const auto& [value, w] : weight) {
    if (std::sqrt(w) > threshold) out.insert(value);
  }
  return out;
}

double garbage_norm(const AmplitudeVector& v) {
  double w = 0.0;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (!v.basis().value(i)) w += std::norm(v[i]);
  }
  return std::sqrt(w);
}

std::set<std::size_t> image_of(const FiniteFunction& f,
                               const std::set<std::size_t>& members) {
  std::set<std::size_t> out;
  for (std::size_t x : members) out.insert(f(x));
  return out;
}

}  // namespace topomap
