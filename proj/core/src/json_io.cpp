#include "resatlas/json_io.hpp"

#include <limits>

namespace resatlas {

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

json rat_array(const RatVec& v) {
  json a = json::array();
  for (const Rat& x : v) a.push_back(rat_str(x));
  return a;
}

json to_json(const GroupSpec& spec) {
  json j;
  j["family"] = family_name(spec.family);
  j["n"] = spec.family == Family::F4 ? 0 : spec.n;
  return j;
}

GroupSpec group_spec_from_json(const json& j) {
  GroupSpec spec;
  spec.family = family_parse(j.at("family").get<std::string>());
  spec.n = j.value("n", 0);
  validate(spec);
  return spec;
}

json to_json(const Weight& w) { return rat_array(w.coords); }

json to_json(const GroupConstants& c) {
  json j;
  j["m_half"] = c.m_half;
  j["m_long"] = c.m_long;
  j["rho_alpha"] = rat_str(c.rho_alpha);
  j["m_sup"] = rat_str(c.m_sup);
  j["alpha_norm_sq"] = rat_str(c.alpha_norm_sq);
  j["pole_free"] = c.pole_free;
  return j;
}

json to_json(const MTypeParam& sigma) {
  json j;
  j["tuple"] = rat_array(sigma.tuple);
  j["weight"] = to_json(m_weight(sigma));
  j["multiplicity"] = sigma.multiplicity;
  if (sigma.multiplicity_flagged) {
    j["path_count"] = sigma.path_count;
    j["multiplicity_flagged"] = true;
  }
  return j;
}

json to_json(const PlancherelDensity& d) {
  json j;
  j["kind"] = kind_name(d.kind);
  j["s"] = d.s;
  j["exponents"] = rat_array(d.exponents);
  j["b_max"] = rat_str(d.b_max);
  return j;
}

json to_json(const std::vector<PoleRecord>& poles) {
  json a = json::array();
  for (const PoleRecord& p : poles) {
    json j;
    j["v"] = rat_str(p.v);
    j["k_theorem"] = p.k_theorem;
    j["k_section5"] = p.k_section5;
    j["residue_coeff"] = rat_str(p.residue_coeff);
    a.push_back(std::move(j));
  }
  return a;
}

json to_json(const ResonanceAtlas& atlas) {
  json j;
  j["group"] = to_json(atlas.spec);
  j["tau"] = rat_array(atlas.tau.a);
  json fams = json::array();
  for (const ResonanceFamily& f : atlas.families) {
    json jf;
    jf["sigma"] = to_json(f.sigma);
    if (f.d_sigma <= Int(std::numeric_limits<long>::max()))
      jf["d_sigma"] = f.d_sigma.convert_to<long>();
    else
      jf["d_sigma"] = f.d_sigma.str();
    json rs = json::array();
    for (const Resonance& r : f.resonances) {
      json jr;
      jr["v"] = rat_str(r.v);
      jr["k_theorem"] = r.k_theorem;
      jr["k_section5"] = r.k_section5;
      jr["z_paper"] = rat_str(r.z_paper);
      jr["z_hc"] = rat_str(r.z_hc);
      jr["residue_coeff"] = rat_str(r.residue_coeff);
      jr["zeta_im"] = r.zeta_im;
      rs.push_back(std::move(jr));
    }
    jf["resonances"] = std::move(rs);
    fams.push_back(std::move(jf));
  }
  j["families"] = std::move(fams);
  return j;
}

json to_json(const OrbitInfo& orbit) {
  json j;
  j["label"] = orbit_name(orbit.label);
  j["real_dim"] = orbit.real_dim;
  j["complex_partition"] = orbit.complex_partition;
  j["description"] = orbit.description;
  return j;
}

namespace {

long case_index(const ResidueRepInfo& info) {
  switch (info.spec.family) {
    case Family::SpinEven:
      return info.case_label == CaseLabel::spin_finite ? 1 : 2;
    case Family::SU:
      switch (info.case_label) {
        case CaseLabel::east: return 1;
        case CaseLabel::north: return 2;
        case CaseLabel::south: return 3;
        default: return 4;
      }
    default:  // Sp, F4
      switch (info.case_label) {
        case CaseLabel::east: return 1;
        case CaseLabel::north: return 2;
        default: return 3;
      }
  }
}

}  // namespace

json to_json(const ResidueRepInfo& info) {
  json j;
  j["group"] = to_json(info.spec);
  j["k"] = info.k;
  j["pole_v"] = rat_str(info.pole_v);
  j["case"] = case_name(info.case_label);
  j["case_index"] = case_index(info);
  j["minimal_ktype"] = to_json(info.minimal_ktype);
  j["discrete_series"] = info.discrete_series;
  if (info.discrete_series) {
    j["blattner"] = to_json(info.blattner);
    j["hc_param"] = to_json(info.hc_param);
  } else {
    j["delta_tuple"] = rat_array(info.delta_tuple);
    j["delta_weight"] = to_json(info.delta_eps);
    if (!info.delta_triality.empty()) j["delta_triality_frame"] = rat_array(info.delta_triality);
    if (info.nu_is_imaginary_marker) {
      j["nu"] = "i*lambda_k";
      j["nu_alpha_im"] = rat_str(info.nu_alpha);
    } else {
      j["nu_alpha"] = rat_str(info.nu_alpha);
      j["nu_pm"] = info.nu_pm;
    }
  }
  j["unitary"] = info.unitary;
  j["finite_dim"] = info.finite_dim;
  j["gk_dim"] = info.gk_dim;
  j["orbit"] = to_json(info.orbit);
  j["boundary_policy"] = info.boundary_policy;
  return j;
}

json to_json(const QuadratureReport& rep) {
  json j;
  j["target"] = rep.target;
  j["group"] = to_json(rep.spec);
  j["sigma_tuple"] = rat_array(rep.sigma_tuple);
  if (!rep.exact_str.empty()) j["exact"] = rep.exact_str;
  j["exact_value"] = rep.exact_value;
  j["numeric_value"] = rep.numeric_value;
  j["abs_err"] = rep.abs_err;
  j["rel_err"] = rep.rel_err;
  j["samples"] = rep.samples;
  j["tol"] = rep.tol;
  j["passed"] = rep.passed;
  if (!rep.detail.empty()) j["detail"] = rep.detail;
  return j;
}

}  // namespace resatlas
