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

#include "pestlab/serialize.hpp"

#include <sstream>

#include "pestlab/textio.hpp"

namespace pestlab {
namespace {

Json header(std::string_view kind) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = kind;
  return j;
}

Json element_list(std::span<const GroupElement> xs, int m) {
  Json out = Json::array();
  for (auto x : xs) out.push_back(to_binary(x, m));
  return out;
}

Json pair_json(const EdgeStatePair& p, int m) {
  Json j;
  j["a"] = to_binary(p.a, m);
  j["b"] = to_binary(p.b, m);
  j["c"] = to_binary(p.c, m);
  j["d"] = to_binary(p.d, m);
  return j;
}

Json complex_json(Complex z) {
  Json j;
  j["re"] = z.real();
  j["im"] = z.imag();
  return j;
}

Json report_body(const FidelityReport& r) {
  Json j;
  j["t"] = r.t;
  j["t_pi"] = r.t_pi ? Json(format_rational(*r.t_pi)) : Json(nullptr);
  j["amplitude"] = complex_json(r.amplitude);
  j["fidelity"] = r.fidelity;
  j["tolerance"] = r.tolerance;
  j["hit"] = r.is_hit();
  return j;
}

std::string hex(Mask v) {
  std::ostringstream os;
  os << "0x" << std::hex << v;
  return os.str();
}

}  // namespace

std::string_view class_name(FunctionClass kind) {
  switch (kind) {
    case FunctionClass::kBent: return "Bent";
    case FunctionClass::kSemiBent: return "SemiBent";
    case FunctionClass::kPlateaued: return "Plateaued";
    case FunctionClass::kOther: return "Other";
  }
  return "Other";
}

Json spectrum_json(const ConnectionSet& s, const Spectrum& spec) {
  Json j = header("spectrum");
  j["m"] = s.dimension();
  j["support"] = element_list(s.members(), s.dimension());
  j["connected"] = is_connected(s);
  Json entries = Json::array();
  for (Mask x = 0; x < spec.lambda.size(); ++x) {
    Json e;
    e["x"] = to_binary(GroupElement{x}, spec.m);
    e["lambda"] = spec.lambda[x];
    entries.push_back(std::move(e));
  }
  j["spectrum"] = std::move(entries);
  return j;
}

Json walsh_json(const WalshSpectrum& w, const Classification& c) {
  Json j = header("walsh_spectrum");
  j["m"] = w.m;
  j["class"] = class_name(c.kind);
  j["amplitude"] = c.amplitude;
  if (c.dual) {
    std::string table;
    for (auto v : c.dual->table()) table.push_back(v ? '1' : '0');
    j["dual_truth_table"] = table;
  }
  Json entries = Json::array();
  for (Mask a = 0; a < w.values.size(); ++a) {
    Json e;
    e["a"] = to_binary(GroupElement{a}, w.m);
    e["value"] = w.values[a];
    entries.push_back(std::move(e));
  }
  j["spectrum"] = std::move(entries);
  return j;
}

Json basis_json(const TobBasis& basis) {
  const FieldSpec& field = basis.field();
  const auto log = discrete_log_table(field);
  Json j = header("trace_orthogonal_basis");
  j["m"] = field.degree();
  j["modulus"] = hex(field.modulus());
  j["primitive"] = field.is_primitive();
  Json elems = Json::array();
  for (auto a : basis.elements()) {
    Json e;
    e["hex"] = hex(a.bits);
    e["power"] = log.empty() ? Json(nullptr) : Json(log[a.bits]);
    e["coords"] = to_binary(basis.coords(a), field.degree());
    elems.push_back(std::move(e));
  }
  j["basis"] = std::move(elems);
  return j;
}

Json certificate_json(const PestCertificate& cert) {
  const int m = cert.m;
  Json j = header("pest_certificate");
  j["m"] = m;
  j["pair"] = pair_json(cert.pair, m);
  j["status"] = cert.positive ? "positive" : "negative";
  j["reason"] = cert.reason ? Json(reason_name(*cert.reason)) : Json(nullptr);
  j["rho"] = cert.positive ? Json(cert.rho) : Json(nullptr);
  j["M"] = cert.positive ? Json(cert.modulus) : Json(nullptr);
  j["ell"] = cert.positive ? Json(cert.ell) : Json(nullptr);
  j["t_min_pi"] = cert.positive ? Json(format_rational(cert.t_min_pi)) : Json(nullptr);
  const bool has_partition = !cert.partition.plus.empty();
  j["x0"] = has_partition ? Json(to_binary(cert.x0, m)) : Json(nullptr);
  j["omega_plus"] = element_list(cert.partition.plus, m);
  j["omega_minus"] = element_list(cert.partition.minus, m);
  j["connected"] = cert.connected;
  j["ab_is_edge"] = cert.ab_is_edge;
  j["cd_is_edge"] = cert.cd_is_edge;
  return j;
}

Json partners_json(const ConnectionSet& s, GroupElement a, GroupElement b, const std::vector<PestPartner>& partners) {
  const int m = s.dimension();
  Json j = header("pest_partners");
  j["m"] = m;
  j["edge"] = {to_binary(a, m), to_binary(b, m)};
  Json list = Json::array();
  for (const auto& p : partners) {
    Json e;
    e["c"] = to_binary(p.c, m);
    e["d"] = to_binary(p.d, m);
    e["certificate"] = certificate_json(p.certificate);
    list.push_back(std::move(e));
  }
  j["partners"] = std::move(list);
  return j;
}

Json fidelity_json(const ConnectionSet& s, const EdgeStatePair& pair, const FidelityReport& report) {
  Json j = header("fidelity_report");
  j["m"] = s.dimension();
  j["pair"] = pair_json(pair, s.dimension());
  const Json body = report_body(report);
  for (const auto& [k, v] : body.items()) j[k] = v;
  return j;
}

Json sweep_json(const ConnectionSet& s, const EdgeStatePair& pair, const SweepResult& sweep) {
  Json j = header("fidelity_sweep");
  j["m"] = s.dimension();
  j["pair"] = pair_json(pair, s.dimension());
  j["ell_max"] = sweep.ell_max;
  j["premise_holds"] = sweep.premise_holds;
  j["best"] = report_body(sweep.best);
  Json hits = Json::array();
  for (const auto& r : sweep.hits) hits.push_back(report_body(r));
  j["hits"] = std::move(hits);
  j["grid_scanned"] = sweep.grid_scanned;
  Json grid = Json::array();
  for (const auto& r : sweep.grid_hits) grid.push_back(report_body(r));
  j["grid_hits"] = std::move(grid);
  return j;
}

Json lift_json(const LiftCertificate& cert) {
  const int m = cert.lifted.dimension();
  Json j = header("lift_certificate");
  j["lift_kind"] = cert.kind == LiftKind::kBentLift ? "BentLift" : "SemiBentLift";
  j["base_m"] = cert.base.dimension();
  std::string table;
  for (auto v : cert.base.table()) table.push_back(v ? '1' : '0');
  j["base_truth_table"] = table;
  j["base_support"] = element_list(support(cert.base), cert.base.dimension());
  j["m"] = m;
  j["lifted_support"] = element_list(cert.lifted.members(), m);
  j["pair"] = pair_json(cert.pair, m);
  j["t_pi"] = format_rational(cert.t_pi);
  j["pest"] = certificate_json(cert.pest);
  return j;
}

}  // namespace pestlab
