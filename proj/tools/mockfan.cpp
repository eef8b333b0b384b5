// mockfan: command-line front end for the cone, fan and subdivision engine.
//
// Exit status: 0 success, 1 verification mismatch, 2 input error,
// 3 internal inconsistency.

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "mockfan/grassmann.hpp"
#include "mockfan/io.hpp"

using namespace mockfan;
using io::json;

namespace {

enum Exit { kPass = 0, kMismatch = 1, kInputError = 2, kInternal = 3 };

void emit(const std::string& path, const json& j) {
  if (path.empty() || path == "-") std::cout << io::dump(j);
  else io::write_file(path, j);
}

// A fan file, or the fan inside a subdivision file.
Fan load_fan(const json& j, bool check) {
  if (io::schema_of(j) == "mockfan.subdivision/1") return io::fan_from_json(j.at("fan"), false);
  return io::fan_from_json(j, check);
}

json bounded_report(const Fan& f) {
  json bounded = json::array(), special = json::array(), euler = json::array();
  for (std::size_t k = 0; k < f.size(); ++k) {
    const Cone& c = f.cones()[k];
    if (is_special(c)) special.push_back(k);
    if (is_bounded(c)) {
      bounded.push_back(k);
      euler.push_back(euler_char_height1(c));
    }
  }
  json j;
  j["schema"] = "mockfan.bounded/1";
  j["bounded"] = std::move(bounded);
  j["euler_char"] = std::move(euler);
  j["special"] = std::move(special);
  j["specifically_reduced_scale"] = io::to_json(specifically_reduced_scale(f));
  j["specifically_reduced"] = is_specifically_reduced(f);
  j["compactly_arranged"] = is_compactly_arranged(f);
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact polyhedral fans, mock polytope subdivisions and the Gr(2,n) check"};
  app.require_subcommand(1, 1);

  std::string in, out, annotations_path;
  std::vector<std::string> inputs;
  long long scale = 1;
  int min_effective = 0;
  bool no_check = false;
  grassmann::GrassmannSpec spec;

  auto* dual = app.add_subcommand("dual", "Dual cone of a cone file");
  dual->add_option("input", in, "Cone file")->required();
  dual->add_option("-o,--output", out, "Output path (default stdout)");

  auto* faces_cmd = app.add_subcommand("faces", "All faces of a cone");
  faces_cmd->add_option("input", in, "Cone file")->required();
  faces_cmd->add_option("-o,--output", out, "Output path (default stdout)");

  auto* subdivide = app.add_subcommand("subdivide", "Subdivision fan and active sets of a chart");
  subdivide->add_option("input", in, "Chart file")->required();
  subdivide->add_option("-o,--output", out, "Output path (default stdout)");

  auto* glue = app.add_subcommand("glue", "Subdivide several charts and glue the fans");
  glue->add_option("inputs", inputs, "Chart files")->required();
  glue->add_option("-o,--output", out, "Output path (default stdout)");

  auto* bounded = app.add_subcommand("bounded", "Special and bounded cones of a fan");
  bounded->add_option("input", in, "Fan or subdivision file")->required();
  bounded->add_option("-o,--output", out, "Output path (default stdout)");
  bounded->add_flag("--no-check", no_check, "Skip the fan condition check on input");

  auto* rescale_cmd = app.add_subcommand("rescale", "Image of a fan under (v, t) -> (n v, t)");
  rescale_cmd->add_option("input", in, "Fan or subdivision file")->required();
  rescale_cmd->add_option("--scale", scale, "Positive integer n")->required()->check(CLI::PositiveNumber);
  rescale_cmd->add_option("-o,--output", out, "Output path (default stdout)");
  rescale_cmd->add_flag("--no-check", no_check, "Skip the fan condition check on input");

  auto* vol = app.add_subcommand("vol", "Alternating sum over bounded cones");
  vol->add_option("input", in, "Fan or subdivision file")->required();
  vol->add_option("--annotations", annotations_path, "Annotation file");
  vol->add_option("--min-effective-dim", min_effective,
                  "Keep cones with at least this many distinct active monomials (subdivision input)");
  vol->add_option("-o,--output", out, "Write the formal sum file here as well");
  vol->add_flag("--no-check", no_check, "Skip the fan condition check on input");

  auto add_spec = [&](CLI::App* cmd) {
    cmd->add_option("--n", spec.n, "Gr(2, n), n >= 4")->required();
    cmd->add_option("--d", spec.d, "Degree, d >= 2")->required();
    cmd->add_option("--l", spec.l, "Scale, l >= 1")->default_val(1);
    cmd->add_option("-o,--output", out, "Also write the subdivision file here");
  };
  auto* gverify = app.add_subcommand("grassmann-verify", "Check the 7 bounded cones and active sets");
  add_spec(gverify);
  auto* gvol = app.add_subcommand("grassmann-vol", "Volume expression of the zero chart");
  add_spec(gvol);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (dual->parsed()) {
      emit(out, io::to_json(dual_cone(io::cone_from_json(io::read_file(in)))));
    } else if (faces_cmd->parsed()) {
      Cone c = io::cone_from_json(io::read_file(in));
      json list = json::array();
      for (const auto& f : faces(c)) {
        json tight = json::array();
        for (std::size_t k = f.index.tight_facets.find_first(); k != Bitset::npos;
             k = f.index.tight_facets.find_next(k))
          tight.push_back(k);
        json entry = io::to_json(f.cone);
        entry.erase("schema");
        entry["dim"] = f.cone.dim();
        entry["tight_facets"] = std::move(tight);
        list.push_back(std::move(entry));
      }
      json j;
      j["schema"] = "mockfan.faces/1";
      j["cone"] = io::to_json(c);
      j["faces"] = std::move(list);
      emit(out, j);
    } else if (subdivide->parsed()) {
      emit(out, io::to_json(subdivide_chart(io::chart_from_json(io::read_file(in)))));
    } else if (glue->parsed()) {
      std::vector<SubdivisionResult> results;
      std::vector<std::string> labels;
      for (const auto& p : inputs) {
        results.push_back(subdivide_chart(io::chart_from_json(io::read_file(p))));
        labels.push_back(results.back().chart.label);
      }
      emit(out, io::to_json(glue_charts(results), labels));
    } else if (bounded->parsed()) {
      emit(out, bounded_report(load_fan(io::read_file(in), !no_check)));
    } else if (rescale_cmd->parsed()) {
      emit(out, io::to_json(rescale(load_fan(io::read_file(in), !no_check), Integer(scale))));
    } else if (vol->parsed()) {
      const json doc = io::read_file(in);
      const Fan f = load_fan(doc, !no_check);
      std::map<std::size_t, StratumAnnotation> notes;
      if (!annotations_path.empty()) notes = io::annotations_from_json(io::read_file(annotations_path));
      std::function<bool(std::size_t)> keep;
      if (min_effective > 0) {
        if (io::schema_of(doc) != "mockfan.subdivision/1" || !doc.contains("effective_dimension"))
          throw InvalidInput("--min-effective-dim needs a subdivision file from 'subdivide'");
        const json dims = doc.at("effective_dimension");
        keep = [&, dims](std::size_t k) { return dims.at(k).get<int>() >= min_effective; };
      }
      FormalSum s = vol_skeleton(f, notes, keep);
      std::cout << render(s) << '\n';
      if (!out.empty()) io::write_file(out, io::to_json(s));
    } else if (gverify->parsed() || gvol->parsed()) {
      spec.validate();
      SubdivisionResult res = subdivide_chart(grassmann::zero_chart(spec));
      if (!out.empty()) io::write_file(out, io::to_json(res));
      grassmann::Report rep = grassmann::verify(spec, res);
      if (gverify->parsed()) {
        std::cout << rep.render();
        return rep.passed() ? kPass : kMismatch;
      }
      if (!rep.passed()) {
        std::cerr << rep.render() << "verification failed; no volume expression\n";
        return kMismatch;
      }
      std::cout << render(grassmann::vol_expression(spec, res)) << '\n';
    }
  } catch (const InvalidInput& e) {
    std::cerr << "error[" << e.code() << "]: " << e.what() << '\n';
    return kInputError;
  } catch (const Inconsistency& e) {
    std::cerr << "error[" << e.code() << "]: " << e.what() << '\n';
    return kInternal;
  } catch (const json::exception& e) {
    std::cerr << "error[E_SCHEMA]: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error[E_INTERNAL]: " << e.what() << '\n';
    return kInternal;
  }
  return kPass;
}
