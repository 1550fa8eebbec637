#include "voxtopo/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "voxtopo/boundary.hpp"
#include "voxtopo/error.hpp"
#include "voxtopo/io.hpp"
#include "voxtopo/labeling.hpp"
#include "voxtopo/repair.hpp"
#include "voxtopo/report.hpp"
#include "voxtopo/shapes.hpp"

namespace voxtopo {

namespace {

using nlohmann::ordered_json;

struct Options {
  std::string input;
  std::string format;
  std::string output;
  std::string budget;
  std::string report = "json";
  std::string adjacency = "26";
  std::string shape;
  std::uint64_t seed = 0;
};

/// Pipeline failure that is reported through the exit code, not an exception.
struct PipelineFailure {
  std::string message;
};

VolumeFormat input_format(const Options& o) {
  if (!o.format.empty()) return *parse_format(o.format);
  return format_from_extension(o.input);
}

VoxelVolume read_input(const Options& o) { return load_volume(o.input, input_format(o)); }

AdjacencyKind adjacency_of(const Options& o) {
  return o.adjacency == "6" ? AdjacencyKind::FACE6 : AdjacencyKind::VERTEX26;
}

std::optional<std::uint64_t> budget_for(const Options& o, const VoxelVolume& v) {
  if (o.budget == "unlimited") return std::nullopt;
  if (o.budget.empty()) return (v.count() + 9) / 10;
  return std::stoull(o.budget);
}

std::string budget_label(std::optional<std::uint64_t> b) {
  return b ? std::to_string(*b) : "unlimited";
}

// Writes to --output when given, otherwise to `out`.
template <typename Fn>
void emit(const Options& o, std::ostream& out, Fn&& write) {
  if (o.output.empty()) {
    write(out);
    return;
  }
  std::ofstream file(o.output, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot write " + o.output);
  write(file);
  file.flush();
  if (!file) throw IoError("write failed for " + o.output);
}

std::string render_json(const ordered_json& j, const Options& o) {
  if (o.report == "json") return j.dump(2) + "\n";
  std::ostringstream os;
  for (const auto& [key, value] : j.items()) {
    os << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
  return os.str();
}

ordered_json coord_list(const std::vector<VoxelCoord>& cs) {
  ordered_json a = ordered_json::array();
  for (const auto& c : cs) a.push_back({c.x, c.y, c.z});
  return a;
}

int run_info(const Options& o, std::ostream& out) {
  const VoxelVolume v = read_input(o);
  const auto pathologies = detect_pathologies(v);
  ordered_json j;
  j["path"] = o.input;
  j["format"] = to_string(input_format(o));
  j["origin"] = {v.origin().x, v.origin().y, v.origin().z};
  j["dims"] = {v.dims().nx, v.dims().ny, v.dims().nz};
  j["voxels"] = v.count();
  j["boundary_voxels"] = find_boundary_voxels(v).size();
  j["pathologies"] = pathologies.size();
  j["well_composed"] = pathologies.empty();
  j["components_26"] = label_components(v, AdjacencyKind::VERTEX26).component_count;
  j["components_6"] = label_components(v, AdjacencyKind::FACE6).component_count;
  emit(o, out, [&](std::ostream& s) { s << render_json(j, o); });
  return kExitOk;
}

int run_components(const Options& o, std::ostream& out) {
  const VoxelVolume v = read_input(o);
  const ComponentLabeling l = label_components(v, adjacency_of(o));
  const BackgroundLabeling bg = label_background(v);
  ordered_json j;
  j["adjacency"] = std::stoi(to_string(l.adjacency));
  j["count"] = l.component_count;
  j["sizes"] = l.component_sizes;
  j["background_components"] = bg.labeling.component_count;
  j["cavities"] = bg.cavity_count();
  emit(o, out, [&](std::ostream& s) { s << render_json(j, o); });
  return kExitOk;
}

int run_repair(const Options& o, std::ostream& out, std::ostream& err) {
  const VoxelVolume v = read_input(o);
  const auto budget = budget_for(o, v);
  const RepairResult r = repair_volume(v, budget);
  ordered_json log;
  log["budget"] = budget_label(budget);
  log["deletions"] = coord_list(r.log.deletions);
  log["additions"] = coord_list(r.log.additions);
  log["passes"] = r.log.passes;
  log["aborted"] = r.log.aborted;
  log["diagnostic"] = r.log.diagnostic;
  // With --output the log is the data on stdout; otherwise the volume is.
  std::ostream& log_stream = o.output.empty() ? err : out;
  log_stream << log.dump(2) << "\n";
  if (r.log.aborted) throw PipelineFailure{"repair aborted: " + r.log.diagnostic};
  const VolumeFormat fmt =
      o.output.empty() ? VolumeFormat::voxlist : format_from_extension(o.output);
  emit(o, out, [&](std::ostream& s) {
    fmt == VolumeFormat::dvol ? write_dvol(r.volume, s) : write_voxlist(r.volume, s);
  });
  return kExitOk;
}

int run_analyze(const Options& o, std::ostream& out, unsigned threads) {
  const VoxelVolume v = read_input(o);
  PipelineOptions po;
  po.budget = budget_for(o, v);
  po.connectivity = adjacency_of(o);
  po.threads = threads;
  po.input_path = o.input;
  po.input_format = to_string(input_format(o));
  const TopologyReport r = run_pipeline(v, po);
  emit(o, out, [&](std::ostream& s) {
    s << render_report(r, o.report == "text" ? ReportMode::text : ReportMode::json);
  });
  if (r.status != PipelineStatus::ok) throw PipelineFailure{to_string(r.status) + ": " + r.diagnostic};
  return kExitOk;
}

int run_mesh(const Options& o, std::ostream& out) {
  const VoxelVolume v = read_input(o);
  const RepairResult r = repair_volume(v, budget_for(o, v));
  if (r.log.aborted) throw PipelineFailure{"repair aborted: " + r.log.diagnostic};
  const ComponentLabeling l = label_components(r.volume, AdjacencyKind::FACE6);
  std::vector<BoundaryComplex> complexes;
  for (std::int32_t id = 1; id <= l.component_count; ++id) {
    complexes.push_back(build_boundary_complex(extract_component(r.volume, l, id)));
  }
  emit(o, out, [&](std::ostream& s) { write_off(complexes, s); });
  return kExitOk;
}

int run_gen(const Options& o, std::ostream& out) {
  const VoxelVolume v = generate_shape(parse_shape_spec(o.shape, o.seed));
  VolumeFormat fmt = VolumeFormat::voxlist;
  if (!o.format.empty()) fmt = *parse_format(o.format);
  else if (!o.output.empty()) fmt = format_from_extension(o.output);
  emit(o, out, [&](std::ostream& s) {
    fmt == VolumeFormat::dvol ? write_dvol(v, s) : write_voxlist(v, s);
  });
  return kExitOk;
}

std::optional<unsigned> threads_from_env() {
  const char* env = std::getenv("VOXTOPO_THREADS");
  if (env == nullptr || *env == '\0') return 0u;
  char* end = nullptr;
  const unsigned long n = std::strtoul(env, &end, 10);
  if (*end != '\0' || n > 4096) return std::nullopt;
  return unsigned(n);
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Topological invariants of binary voxel volumes", "voxtopo"};
  app.require_subcommand(1, 1);
  app.footer("Exit codes: 0 ok, 1 usage error, 2 pipeline failure, 3 I/O error.\n"
             "VOXTOPO_THREADS caps worker threads (0 or unset = auto).");
  Options o;

  const auto formats = CLI::IsMember({"voxlist", "dvol"});
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "Input volume file")->required();
    sub->add_option("--format", o.format, "Input format (default: by extension, .dvol or voxlist)")
        ->check(formats);
  };
  auto add_output = [&](CLI::App* sub, const std::string& what) {
    sub->add_option("-o,--output,--out", o.output, what + " (default: stdout)");
  };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget", o.budget,
                    "Maximum voxel modifications, N or 'unlimited' (default: 10% of voxels, rounded up)")
        ->check([](const std::string& s) -> std::string {
          if (s == "unlimited") return {};
          if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 19)
            return "budget must be a non-negative integer or 'unlimited'";
          return {};
        });
  };
  auto add_report = [&](CLI::App* sub) {
    sub->add_option("--report", o.report, "Report mode (default: json)")
        ->check(CLI::IsMember({"json", "text"}));
  };
  auto add_adjacency = [&](CLI::App* sub, const std::string& what) {
    sub->add_option("--adjacency", o.adjacency, what + " (default: 26)")
        ->check(CLI::IsMember({"6", "26"}));
  };

  auto* info = app.add_subcommand("info", "Volume statistics");
  add_input(info);
  add_report(info);
  add_output(info, "Report file");

  auto* components = app.add_subcommand("components", "Connected-component labeling summary");
  add_input(components);
  add_adjacency(components, "Foreground adjacency");
  add_report(components);
  add_output(components, "Report file");

  auto* repair = app.add_subcommand("repair", "Remove pathological configurations");
  add_input(repair);
  add_budget(repair);
  add_output(repair, "Repaired volume; format by extension");

  auto* analyze = app.add_subcommand("analyze", "Components, surface genus and homology ranks");
  add_input(analyze);
  add_budget(analyze);
  add_adjacency(analyze, "Adjacency grouping the raw input before repair");
  add_report(analyze);
  add_output(analyze, "Report file");

  auto* mesh = app.add_subcommand("mesh", "Export the repaired boundary as an OFF quad mesh");
  add_input(mesh);
  add_budget(mesh);
  add_output(mesh, "OFF file");

  auto* gen = app.add_subcommand("gen", "Generate a fixture volume");
  gen->add_option("--shape", o.shape,
                  "cuboid:a,b,c | ball:r | ring[:a,b,t] | plate:n[,t] | shell[:A,B,C,a,b,c] | "
                  "random:nx,ny,nz,density")
      ->required();
  gen->add_option("--seed", o.seed, "Seed for random shapes (default: 0)");
  gen->add_option("--format", o.format, "Output format (default: by extension)")->check(formats);
  add_output(gen, "Volume file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  const auto threads = threads_from_env();
  if (!threads) {
    err << "error: VOXTOPO_THREADS must be a non-negative integer\n";
    return kExitUsage;
  }

  try {
    if (info->parsed()) return run_info(o, out);
    if (components->parsed()) return run_components(o, out);
    if (repair->parsed()) return run_repair(o, out, err);
    if (analyze->parsed()) return run_analyze(o, out, *threads);
    if (mesh->parsed()) return run_mesh(o, out);
    if (gen->parsed()) return run_gen(o, out);
  } catch (const PipelineFailure& f) {
    err << "error: " << f.message << "\n";
    return kExitPipeline;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitPipeline;
  }
  return kExitUsage;
}

}  // namespace voxtopo
