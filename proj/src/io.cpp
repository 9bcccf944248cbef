#include "stackyfan/io.hpp"

#include <fstream>
#include <functional>
#include <limits>
#include <sstream>

namespace stacky::io {

namespace {

// FNV-1a over the raw input bytes; reports echo it so pipelines can match
// outputs to inputs.
std::string digest(const std::string& bytes) {
  unsigned long long h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error(errc::bad_document, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct LoadedDocument {
  json doc;
  std::string hash;
};

LoadedDocument load(const std::string& path) {
  std::string bytes = read_file(path);
  json doc = json::parse(bytes, nullptr, false);
  if (doc.is_discarded()) throw error(errc::bad_document, "malformed document " + path);
  return {doc, digest(bytes)};
}

json report_skeleton(const std::string& command, const std::string& hash) {
  json r;
  r["command"] = command;
  if (!hash.empty()) r["input"] = json{{"digest", hash}};
  r["result"] = json::object();
  r["diagnostics"] = json::array();
  return r;
}

CommandResult failure(int code, const std::string& command, const std::string& message) {
  CommandResult res;
  res.exit_code = code;
  res.output = json{{"command", command}, {"error", message}};
  res.diagnostics.push_back(message);
  return res;
}

// semantic errors -> exit 1, document errors -> exit 3
CommandResult guard(const std::string& command,
                    const std::function<CommandResult()>& body) {
  try {
    return body();
  } catch (const error& e) {
    int code = e.code() == errc::bad_document ? exit_io : exit_semantic;
    return failure(code, command, e.what());
  } catch (const json::exception& e) {
    return failure(exit_io, command, e.what());
  }
}

}  // namespace

json int_to_json(const Int& v) {
  if (v.fits_ll()) return json(v.to_ll());
  return json(v.str());
}

Int json_to_int(const json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw error(errc::bad_document, "expected an integer");
}

json vec_to_json(const IntVec& v) {
  json a = json::array();
  for (Index i = 0; i < v.size(); ++i) a.push_back(int_to_json(v(i)));
  return a;
}

namespace {

IntVec json_to_vec(const json& j) {
  if (!j.is_array()) throw error(errc::bad_document, "expected an array of integers");
  IntVec v(static_cast<Index>(j.size()));
  Index i = 0;
  for (const auto& e : j) v(i++) = json_to_int(e);
  return v;
}

std::vector<Int> json_to_ints(const json& j) {
  IntVec v = json_to_vec(j);
  return std::vector<Int>(v.data(), v.data() + v.size());
}

json ints_to_json(const std::vector<Int>& v) {
  json a = json::array();
  for (const Int& x : v) a.push_back(int_to_json(x));
  return a;
}

}  // namespace

json group_to_json(const FGAbelianGroup& g) {
  json out;
  out["free_rank"] = static_cast<long long>(g.free_rank());
  out["torsion"] = ints_to_json(g.torsion());
  return out;
}

StackyFan parse_stacky_fan(const json& doc) {
  if (!doc.is_object() || !doc.contains("lattice") || !doc.contains("beta") ||
      !doc.contains("max_cones"))
    throw error(errc::bad_document, "stacky fan document needs lattice, beta, max_cones");
  const json& lattice = doc.at("lattice");
  if (!lattice.is_object() || !lattice.contains("rank"))
    throw error(errc::bad_document, "lattice needs a rank");
  long long rank = lattice.at("rank").get<long long>();
  if (rank < 0) throw error(errc::bad_document, "negative lattice rank");
  std::vector<Int> torsion;
  if (lattice.contains("torsion")) torsion = json_to_ints(lattice.at("torsion"));

  const json& beta = doc.at("beta");
  if (!beta.is_array()) throw error(errc::bad_document, "beta must be an array of columns");
  const Index n = static_cast<Index>(beta.size());
  const Index height = static_cast<Index>(rank) + static_cast<Index>(torsion.size());
  IntMat columns(height, n);
  for (Index i = 0; i < n; ++i) {
    IntVec col = json_to_vec(beta.at(static_cast<size_t>(i)));
    if (col.size() != height)
      throw error(errc::bad_document,
                  "beta column " + std::to_string(i) + " must have rank + torsion entries");
    columns.col(i) = col;
  }

  std::vector<std::vector<int>> cones;
  for (const auto& c : doc.at("max_cones")) {
    std::vector<int> cone;
    for (const auto& idx : c) {
      long long v = idx.get<long long>();
      if (v < 0 || v >= n) throw error(errc::bad_document, "max_cones index out of range");
      cone.push_back(static_cast<int>(v));
    }
    cones.push_back(cone);
  }

  StackyFan sf = make_stacky_fan(static_cast<Index>(rank), torsion, columns, cones);

  if (doc.contains("rays")) {
    const json& rays = doc.at("rays");
    if (!rays.is_array() || static_cast<Index>(rays.size()) != sf.ray_count())
      throw error(errc::bad_document, "rays member does not match beta");
    for (Index i = 0; i < sf.ray_count(); ++i) {
      IntVec r = json_to_vec(rays.at(static_cast<size_t>(i)));
      if (r.size() != sf.free_rank)
        throw error(errc::bad_document, "ray " + std::to_string(i) + " has wrong dimension");
      for (Index k = 0; k < sf.free_rank; ++k)
        if (r(k) != sf.fan.rays[static_cast<size_t>(i)](k))
          throw error(errc::bad_document,
                      "ray " + std::to_string(i) + " disagrees with the primitivized beta column");
    }
  }
  return sf;
}

json stacky_fan_to_json(const StackyFan& sf) {
  json doc;
  doc["lattice"] = json{{"rank", static_cast<long long>(sf.free_rank)},
                        {"torsion", ints_to_json(sf.torsion_orders)}};
  json beta = json::array();
  IntMat columns = sf.beta_columns();
  for (Index i = 0; i < sf.ray_count(); ++i) beta.push_back(vec_to_json(columns.col(i)));
  doc["beta"] = beta;
  json cones = json::array();
  for (const auto& c : sf.fan.max_cones) cones.push_back(c);
  doc["max_cones"] = cones;
  json rays = json::array();
  for (const auto& r : sf.fan.rays) rays.push_back(vec_to_json(r));
  doc["rays"] = rays;
  return doc;
}

Decomposition parse_decomposition(const json& doc) {
  if (!doc.is_object() || !doc.contains("canonical") || !doc.contains("multiplicities") ||
      !doc.contains("gerbe"))
    throw error(errc::bad_document,
                "decomposition document needs canonical, multiplicities, gerbe");
  Decomposition dec;
  dec.canonical = parse_stacky_fan(doc.at("canonical"));
  dec.multiplicities = json_to_ints(doc.at("multiplicities"));
  for (const auto& e : doc.at("gerbe")) {
    if (!e.is_object() || !e.contains("order") || !e.contains("class"))
      throw error(errc::bad_document, "gerbe entries need order and class");
    dec.gerbe.push_back(GerbeEntry{json_to_int(e.at("order")), json_to_vec(e.at("class"))});
  }
  return dec;
}

json decomposition_to_json(const Decomposition& dec) {
  json doc;
  doc["canonical"] = stacky_fan_to_json(dec.canonical);
  doc["multiplicities"] = ints_to_json(dec.multiplicities);
  json gerbe = json::array();
  for (const auto& e : dec.gerbe)
    gerbe.push_back(json{{"order", int_to_json(e.order)}, {"class", vec_to_json(e.cls)}});
  doc["gerbe"] = gerbe;
  return doc;
}

CommandResult cmd_validate(const std::string& path) {
  return guard("validate", [&] {
    LoadedDocument in = load(path);
    CommandResult res;
    json report = report_skeleton("validate", in.hash);
    try {
      StackyFan sf = parse_stacky_fan(in.doc);
      report["result"]["valid"] = true;
      report["result"]["rays"] = static_cast<long long>(sf.ray_count());
      res.exit_code = exit_ok;
    } catch (const error& e) {
      if (e.code() == errc::bad_document) throw;
      report["result"]["valid"] = false;
      report["result"]["violation"] = errc_name(e.code());
      report["diagnostics"].push_back(e.what());
      res.diagnostics.push_back(e.what());
      res.exit_code = exit_semantic;
    }
    res.output = report;
    return res;
  });
}

namespace {

json picard_to_json(const PicardData& pd) {
  json out;
  out["group"] = group_to_json(pd.pic);
  json classes = json::array();
  for (const auto& c : pd.divisor_classes) classes.push_back(vec_to_json(c));
  out["divisor_classes"] = classes;
  return out;
}

}  // namespace

CommandResult cmd_invariants(const std::string& path) {
  return guard("invariants", [&] {
    LoadedDocument in = load(path);
    StackyFan sf = parse_stacky_fan(in.doc);
    json report = report_skeleton("invariants", in.hash);
    PicardData pd = dg_group(sf);
    DMTorus torus = dm_torus(sf);
    json& r = report["result"];
    r["pic"] = group_to_json(pd.pic);
    json classes = json::array();
    for (const auto& c : pd.divisor_classes) classes.push_back(vec_to_json(c));
    r["divisor_classes"] = classes;
    r["multiplicities"] = ints_to_json(multiplicities(sf));
    r["torus"] = json{{"rank", static_cast<long long>(torus.torus_rank)},
                      {"gerbe_factors", ints_to_json(torus.gerbe_factors)}};
    if (sf.is_point()) {
      r["class_group"] = group_to_json(FGAbelianGroup());
    } else {
      r["class_group"] = group_to_json(class_group(sf.fan).group);
    }
    r["orbifold"] = sf.is_orbifold();
    r["canonical"] = is_canonical(sf);
    r["complete"] = is_complete(sf.fan);
    r["coarse_smooth"] = is_smooth(sf.fan);
    CommandResult res;
    res.output = report;
    return res;
  });
}

CommandResult cmd_decompose(const std::string& path) {
  return guard("decompose", [&] {
    LoadedDocument in = load(path);
    StackyFan sf = parse_stacky_fan(in.doc);
    CommandResult res;
    res.output = decomposition_to_json(decompose(sf));
    return res;
  });
}

CommandResult cmd_recompose(const std::string& path) {
  return guard("recompose", [&] {
    LoadedDocument in = load(path);
    Decomposition dec = parse_decomposition(in.doc);
    CommandResult res;
    res.output = stacky_fan_to_json(recompose(dec));
    return res;
  });
}

CommandResult cmd_compare(const std::string& path_a, const std::string& path_b) {
  return guard("compare", [&] {
    LoadedDocument in_a = load(path_a);
    LoadedDocument in_b = load(path_b);
    StackyFan sf1 = parse_stacky_fan(in_a.doc);
    StackyFan sf2 = parse_stacky_fan(in_b.doc);
    json report = report_skeleton("compare", in_a.hash + ":" + in_b.hash);
    Verdict v = compare(sf1, sf2);
    json& r = report["result"];
    switch (v.kind) {
      case Verdict::Kind::Isomorphic:
        r["verdict"] = "isomorphic";
        r["ray_permutation"] = v.ray_permutation;
        break;
      case Verdict::Kind::Distinct:
        r["verdict"] = "distinct";
        r["invariant"] = v.invariant;
        r["values"] = json::array({v.lhs, v.rhs});
        break;
      case Verdict::Kind::Inconclusive:
        r["verdict"] = "inconclusive";
        r["reason"] = v.reason;
        break;
    }
    CommandResult res;
    res.output = report;
    return res;
  });
}

CommandResult cmd_recognize(const std::string& path) {
  return guard("recognize", [&] {
    LoadedDocument in = load(path);
    StackyFan sf = parse_stacky_fan(in.doc);
    json report = report_skeleton("recognize", in.hash);
    json& r = report["result"];
    WpsRecognition wps = recognize_wps(sf);
    if (wps.is_wps) {
      r["wps"] = ints_to_json(wps.weights);
    } else {
      r["wps"] = nullptr;
      r["wps_reason"] = wps.reason;
    }
    try {
      ToricLineReport line = classify_toric_line(sf);
      json lj;
      lj["multiplicities"] = ints_to_json(line.multiplicities);
      lj["gcd"] = int_to_json(line.gcd);
      lj["lcm"] = int_to_json(line.lcm);
      lj["pic"] = group_to_json(line.pic);
      lj["weights"] = ints_to_json(line.weights);
      lj["k"] = json::array({int_to_json(line.k1), int_to_json(line.k2)});
      r["toric_line"] = lj;
    } catch (const error& e) {
      if (e.code() != errc::not_a_line) throw;
      r["toric_line"] = nullptr;
      r["toric_line_reason"] = e.what();
    }
    CommandResult res;
    res.output = report;
    return res;
  });
}

CommandResult cmd_quotient(const std::string& path) {
  return guard("quotient", [&] {
    LoadedDocument in = load(path);
    StackyFan sf = parse_stacky_fan(in.doc);
    json report = report_skeleton("quotient", in.hash);
    QuotientPresentation qp = quotient_presentation(sf);
    json& r = report["result"];
    r["characters"] = group_to_json(qp.character_group);
    json weights = json::array();
    for (const auto& w : qp.action_weights) weights.push_back(vec_to_json(w));
    r["weights"] = weights;
    json patterns = json::array();
    for (const auto& p : qp.cox_patterns) patterns.push_back(p);
    r["patterns"] = patterns;
    CommandResult res;
    res.output = report;
    return res;
  });
}

CommandResult cmd_root_divisors(const std::string& path, const std::vector<Int>& orders) {
  return guard("root", [&] {
    LoadedDocument in = load(path);
    StackyFan sf = parse_stacky_fan(in.doc);
    CommandResult res;
    res.output = stacky_fan_to_json(root_divisors(sf, orders));
    return res;
  });
}

CommandResult cmd_root_line_bundle(const std::string& path, const std::vector<Int>& coeffs,
                                   const Int& order) {
  return guard("root", [&] {
    LoadedDocument in = load(path);
    StackyFan sf = parse_stacky_fan(in.doc);
    IntVec c(static_cast<Index>(coeffs.size()));
    for (size_t i = 0; i < coeffs.size(); ++i) c(static_cast<Index>(i)) = coeffs[i];
    CommandResult res;
    res.output = stacky_fan_to_json(root_line_bundle(sf, c, order));
    return res;
  });
}

CommandResult cmd_wps(const std::vector<Int>& weights) {
  return guard("wps", [&] {
    CommandResult res;
    res.output = stacky_fan_to_json(wps_stacky_fan(weights));
    return res;
  });
}

CommandResult cmd_line(const Int& a1, const Int& a2) {
  return guard("line", [&] {
    CommandResult res;
    res.output = stacky_fan_to_json(line_stacky_fan(a1, a2));
    return res;
  });
}

std::string render(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace stacky::io
