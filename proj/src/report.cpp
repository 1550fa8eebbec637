#include "voxtopo/report.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <sstream>
#include <thread>

#include "voxtopo/boundary.hpp"
#include "voxtopo/error.hpp"
#include "voxtopo/labeling.hpp"
#include "voxtopo/repair.hpp"
#include "voxtopo/surface_topology.hpp"

namespace voxtopo {

namespace {

struct ComponentOutcome {
  std::optional<ComponentReport> report;
  std::string error;
  bool internal = false;
};

ComponentOutcome analyze_component(const VoxelVolume& component, std::int32_t id) {
  ComponentOutcome out;
  try {
    const BoundaryComplex complex = build_boundary_complex(component);
    const auto surfaces = analyze_surfaces(complex);
    ComponentReport rep;
    rep.id = id;
    rep.voxels = component.count();
    std::vector<std::int64_t> genera;
    for (const auto& s : surfaces) {
      rep.surfaces.push_back(SurfaceReport{s.surface, s.faces, s.points,
                                           s.classification.m3, s.classification.m4,
                                           s.classification.m5, s.classification.m6,
                                           s.euler, s.genus});
      genera.push_back(s.genus);
    }
    rep.homology = homology_of_component(genera);
    rep.cavities = label_background(component).cavity_count();
    if (rep.cavities != rep.homology.b2) {
      throw InternalError("cavity count " + std::to_string(rep.cavities) +
                          " disagrees with boundary surface count " +
                          std::to_string(rep.surfaces.size()));
    }
    std::int64_t surface_chi = 0;
    for (const auto& s : rep.surfaces) surface_chi += s.euler;
    if (2 * euler_characteristic_3m(rep.homology) != surface_chi) {
      throw InternalError("chi(M) is not half of chi(boundary)");
    }
    out.report = std::move(rep);
  } catch (const ClassificationError& e) {
    out.error = e.what();
  } catch (const Error& e) {
    out.error = e.what();
    out.internal = true;
  }
  return out;
}

unsigned worker_count(unsigned requested, std::size_t jobs) {
  unsigned n = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
  return unsigned(std::min<std::size_t>(n, std::max<std::size_t>(jobs, 1)));
}

void append(std::string& diag, const std::string& msg) {
  if (!diag.empty()) diag += "; ";
  diag += msg;
}

template <typename T>
T get_field(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParameterError(std::string("report json: missing key '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError(std::string("report json: bad value for '") + key + "': " + e.what());
  }
}

}  // namespace

std::string to_string(PipelineStatus s) {
  switch (s) {
    case PipelineStatus::ok: return "ok";
    case PipelineStatus::repair_aborted: return "repair_aborted";
    case PipelineStatus::classification_failed: return "classification_failed";
  }
  return "?";
}

TopologyReport run_pipeline(const VoxelVolume& v, const PipelineOptions& options) {
  if (v.empty()) throw ContractViolation("run_pipeline: empty volume");
  TopologyReport report;
  report.input = {options.input_path, options.input_format, v.count()};

  std::optional<std::uint64_t> remaining = options.budget;
  auto charge = [&](const RepairLog& log) {
    report.repair.deletions += log.deletions.size();
    report.repair.additions += log.additions.size();
    report.repair.passes += log.passes;
    if (remaining) *remaining -= std::min(*remaining, log.modifications());
  };
  auto abort_with = [&](const std::string& msg) {
    report.repair.aborted = true;
    if (report.status == PipelineStatus::ok) report.status = PipelineStatus::repair_aborted;
    append(report.diagnostic, msg);
  };

  // Repair each raw group on its own so one bad group cannot spoil the rest.
  const ComponentLabeling groups = label_components(v, options.connectivity);
  VoxelVolume merged(v.origin(), v.dims());
  bool any_healthy = false;
  for (std::int32_t g = 1; g <= groups.component_count; ++g) {
    const VoxelVolume part = extract_component(v, groups, g);
    const RepairResult fixed = repair_volume(part, remaining);
    charge(fixed.log);
    if (fixed.log.aborted) {
      abort_with("input group " + std::to_string(g) + " (" + std::to_string(part.count()) +
                 " voxels) not analyzed: " + fixed.log.diagnostic);
      continue;
    }
    fixed.volume.for_each_voxel([&](VoxelCoord c) { merged.set(c); });
    any_healthy = true;
  }

  // Fills can bring separately repaired groups into corner or edge contact.
  if (any_healthy && !is_well_composed(merged)) {
    const RepairResult fixed = repair_volume(merged, remaining);
    charge(fixed.log);
    if (fixed.log.aborted) {
      abort_with("repair of merged groups failed: " + fixed.log.diagnostic);
      return report;
    }
    merged = fixed.volume;
  }
  if (!any_healthy) return report;

  const ComponentLabeling comps = label_components(merged, AdjacencyKind::FACE6);
  std::vector<VoxelVolume> parts;
  parts.reserve(std::size_t(comps.component_count));
  for (std::int32_t id = 1; id <= comps.component_count; ++id) {
    parts.push_back(extract_component(merged, comps, id));
  }

  std::vector<ComponentOutcome> outcomes(parts.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < parts.size(); i = next++) {
      outcomes[i] = analyze_component(parts[i], std::int32_t(i + 1));
    }
  };
  const unsigned workers = worker_count(options.threads, parts.size());
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
  }

  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    auto& o = outcomes[i];
    if (o.report) {
      report.components.push_back(std::move(*o.report));
      continue;
    }
    if (report.status == PipelineStatus::ok) report.status = PipelineStatus::classification_failed;
    append(report.diagnostic, "component " + std::to_string(i + 1) + " (" +
                                  std::to_string(parts[i].count()) + " voxels) " +
                                  (o.internal ? "internal error: " : "classification failed: ") +
                                  o.error);
  }
  return report;
}

nlohmann::ordered_json report_to_json(const TopologyReport& r) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["schema_version"] = r.schema_version;
  j["input"] = {{"path", r.input.path}, {"format", r.input.format}, {"voxels", r.input.voxels}};
  j["repair"] = {{"deletions", r.repair.deletions},
                 {"additions", r.repair.additions},
                 {"passes", r.repair.passes},
                 {"aborted", r.repair.aborted}};
  ordered_json comps = ordered_json::array();
  for (const auto& c : r.components) {
    ordered_json surfaces = ordered_json::array();
    for (const auto& s : c.surfaces) {
      surfaces.push_back({{"id", s.id},
                          {"faces", s.faces},
                          {"points", s.points},
                          {"m3", s.m3},
                          {"m4", s.m4},
                          {"m5", s.m5},
                          {"m6", s.m6},
                          {"euler", s.euler},
                          {"genus", s.genus}});
    }
    comps.push_back({{"id", c.id},
                     {"voxels", c.voxels},
                     {"surfaces", surfaces},
                     {"homology",
                      {{"b0", c.homology.b0},
                       {"b1", c.homology.b1},
                       {"b2", c.homology.b2},
                       {"b3", c.homology.b3}}},
                     {"cavities", c.cavities}});
  }
  j["components"] = comps;
  j["status"] = to_string(r.status);
  j["diagnostic"] = r.diagnostic;
  return j;
}

TopologyReport report_from_json(const nlohmann::json& j) {
  TopologyReport r;
  r.schema_version = get_field<int>(j, "schema_version");
  if (r.schema_version != kSchemaVersion) {
    throw ParameterError("report json: unsupported schema_version " +
                         std::to_string(r.schema_version));
  }
  const auto& in = j.at("input");
  r.input = {get_field<std::string>(in, "path"), get_field<std::string>(in, "format"),
             get_field<std::uint64_t>(in, "voxels")};
  const auto& rep = get_field<nlohmann::json>(j, "repair");
  r.repair = {get_field<std::uint64_t>(rep, "deletions"), get_field<std::uint64_t>(rep, "additions"),
              get_field<std::uint64_t>(rep, "passes"), get_field<bool>(rep, "aborted")};
  for (const auto& cj : get_field<nlohmann::json>(j, "components")) {
    ComponentReport c;
    c.id = get_field<std::int32_t>(cj, "id");
    c.voxels = get_field<std::uint64_t>(cj, "voxels");
    const auto surfaces = get_field<nlohmann::json>(cj, "surfaces");
    if (!surfaces.is_array() || surfaces.empty()) {
      throw ParameterError("report json: component " + std::to_string(c.id) +
                           " must have at least one surface");
    }
    for (const auto& sj : surfaces) {
      c.surfaces.push_back(SurfaceReport{
          get_field<std::int32_t>(sj, "id"), get_field<std::uint64_t>(sj, "faces"),
          get_field<std::uint64_t>(sj, "points"), get_field<std::uint64_t>(sj, "m3"),
          get_field<std::uint64_t>(sj, "m4"), get_field<std::uint64_t>(sj, "m5"),
          get_field<std::uint64_t>(sj, "m6"), get_field<std::int64_t>(sj, "euler"),
          get_field<std::int64_t>(sj, "genus")});
    }
    const auto h = get_field<nlohmann::json>(cj, "homology");
    c.homology = {get_field<std::int64_t>(h, "b0"), get_field<std::int64_t>(h, "b1"),
                  get_field<std::int64_t>(h, "b2"), get_field<std::int64_t>(h, "b3")};
    c.cavities = get_field<std::int64_t>(cj, "cavities");
    r.components.push_back(std::move(c));
  }
  const auto status = get_field<std::string>(j, "status");
  if (status == "ok") r.status = PipelineStatus::ok;
  else if (status == "repair_aborted") r.status = PipelineStatus::repair_aborted;
  else if (status == "classification_failed") r.status = PipelineStatus::classification_failed;
  else throw ParameterError("report json: unknown status '" + status + "'");
  r.diagnostic = get_field<std::string>(j, "diagnostic");
  return r;
}

std::string render_report(const TopologyReport& r, ReportMode mode) {
  if (mode == ReportMode::json) return report_to_json(r).dump(2) + "\n";
  std::ostringstream os;
  os << "input: " << (r.input.path.empty() ? "-" : r.input.path) << " ("
     << (r.input.format.empty() ? "-" : r.input.format) << "), " << r.input.voxels << " voxels\n";
  os << "repair: " << r.repair.deletions << " deletions, " << r.repair.additions
     << " additions, " << r.repair.passes << " passes" << (r.repair.aborted ? ", aborted" : "")
     << "\n";
  os << "status: " << to_string(r.status) << "\n";
  if (!r.diagnostic.empty()) os << "diagnostic: " << r.diagnostic << "\n";
  for (const auto& c : r.components) {
    os << "\ncomponent " << c.id << ": " << c.voxels << " voxels, " << c.surfaces.size()
       << (c.surfaces.size() == 1 ? " surface" : " surfaces") << ", " << c.cavities
       << (c.cavities == 1 ? " cavity" : " cavities") << "\n";
    os << "  homology ranks: b0=" << c.homology.b0 << " b1=" << c.homology.b1
       << " b2=" << c.homology.b2 << " b3=" << c.homology.b3 << "\n";
    for (const auto& s : c.surfaces) {
      os << "  surface " << s.id << ": genus " << s.genus << ", euler " << s.euler << ", "
         << s.faces << " faces, " << s.points << " points (M3=" << s.m3 << " M4=" << s.m4
         << " M5=" << s.m5 << " M6=" << s.m6 << ")\n";
    }
  }
  return os.str();
}

}  // namespace voxtopo
