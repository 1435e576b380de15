#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "arcx/errors.hpp"
#include "arcx/gadgets.hpp"
#include "arcx/generate.hpp"
#include "arcx/hca.hpp"
#include "arcx/io.hpp"
#include "arcx/nhca.hpp"
#include "arcx/nphca.hpp"
#include "arcx/oracle.hpp"
#include "arcx/phca.hpp"
#include "arcx/ucacert.hpp"
#include "arcx/verify.hpp"

namespace {

using namespace arcx;

enum Exit { kOk = 0, kNo = 1, kInput = 2, kPrecondition = 3, kInternal = 4 };

bool quiet = false;

void note(const std::string& line) {
  if (!quiet) std::cerr << line << "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::InvalidInput, "cannot write " + path);
  out << text;
}

InstanceFile load(const std::string& path) {
  InstanceFile f = parse_instance(read_file(path));
  note(path + ": " + instance_summary(f));
  return f;
}

RepClass class_or_tag(const std::string& name, const InstanceFile& f) {
  if (name.empty()) {
    if (!f.cls) throw Error(ErrorKind::InvalidInput, "no --class given and the file has no class tag");
    return *f.cls;
  }
  auto cls = parse_rep_class(name);
  if (!cls) throw Error(ErrorKind::InvalidInput, "unknown class " + name);
  return *cls;
}

int exit_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::SharedEndpoints:
    case ErrorKind::Disconnected:
    case ErrorKind::BoundsExceeded:
    case ErrorKind::TTooSmall:
      return kPrecondition;
    case ErrorKind::InvalidInput:
    case ErrorKind::InvalidInstance:
    case ErrorKind::InvalidPartition:
    case ErrorKind::MalformedCertificate:
      return kInput;
    default:
      return kInternal;
  }
}

int cmd_verify(const std::string& path, const std::string& cls_name, const std::string& rep_path) {
  InstanceFile f = load(path);
  RepClass cls = class_or_tag(cls_name, f);
  std::optional<Representation> r = f.representation;
  if (!rep_path.empty()) {
    InstanceFile other = parse_instance(read_file(rep_path));
    if (other.names != f.names) throw Error(ErrorKind::InvalidInput, "representation file names other vertices");
    r = other.representation;
  }
  if (!r) throw Error(ErrorKind::InvalidInput, "no representation to verify");
  Report rep = check(f.graph, *r, f.partial, cls);
  if (rep.ok()) {
    std::cout << "VALID " << to_string(cls) << "\n";
    return kOk;
  }
  std::cout << "INVALID " << to_string(cls) << "\n" << rep.to_text() << "\n";
  return kNo;
}

int cmd_extend(const std::string& path, const std::string& cls_name, const std::string& out) {
  InstanceFile f = load(path);
  RepClass cls = class_or_tag(cls_name, f);
  Extension e;
  switch (cls) {
    case RepClass::NPHCA: e = solve_nphca(f.graph, f.partial); break;
    case RepClass::PHCA: e = solve_phca(f.graph, f.partial); break;
    case RepClass::NHCA: e = solve_nhca(f.graph, f.partial); break;
    case RepClass::HCA:
      if (shared_predrawn_endpoints(f.partial) > 0) {
        std::cerr << "error: the HCA solver needs pairwise distinct predrawn endpoints; this instance has "
                  << shared_predrawn_endpoints(f.partial) << " shared\n";
        return kPrecondition;
      }
      e = solve_hca_distinct(f.graph, f.partial);
      break;
    default: throw Error(ErrorKind::InvalidInput, "extend supports nphca, phca, nhca and hca");
  }
  if (!e.ok()) {
    std::cout << "NO: " << e.reason << "\n";
    return kNo;
  }
  Report rep = check(f.graph, *e.representation, f.partial, cls);
  if (!rep.ok()) {
    std::cerr << "internal error: constructed representation fails verification\n" << rep.to_text() << "\n";
    return kInternal;
  }
  f.cls = cls;
  f.representation = std::move(e.representation);
  write_output(serialize_instance(f), out);
  return kOk;
}

std::vector<long> parse_list(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidInput, "bad integer \"" + item + "\" in list");
    }
  }
  return out;
}

Partition parse_partition(const std::string& text) {
  Partition p;
  std::stringstream ss(text);
  std::string group;
  while (std::getline(ss, group, '/')) {
    std::vector<int> g;
    for (long i : parse_list(group)) g.push_back(static_cast<int>(i));
    p.push_back(g);
  }
  return p;
}

struct GenOptions {
  std::string kind, cls = "nhca", s, partition, out;
  long n = 0, t = 0;
  int size = 10;
  bool relaxed = false;
  std::uint64_t seed = 1;
};

int cmd_gen(const GenOptions& o) {
  InstanceFile f;
  if (o.kind == "random") {
    auto cls = parse_rep_class(o.cls);
    if (!cls) throw Error(ErrorKind::InvalidInput, "unknown class " + o.cls);
    if (o.size < 1) throw Error(ErrorKind::InvalidInput, "--size must be positive");
    Rng rng(o.seed);
    Instance inst = erase_random(random_of_class(*cls, o.size, rng), 1, 2, rng);
    f.graph = inst.graph;
    f.partial = inst.partial;
    f.cls = cls;
    for (int v = 0; v < f.graph.size(); ++v) f.names.push_back("v" + std::to_string(v));
  } else {
    ThreePartitionInstance inst{parse_list(o.s), o.t, static_cast<int>(o.n)};
    Gadget g;
    if (o.kind == "3part-hca") {
      g = gen_hca_gadget(inst, o.relaxed);
      f.cls = RepClass::HCA;
    } else if (o.kind == "3part-ca") {
      g = gen_ca_distinct_gadget(inst, o.relaxed);
      f.cls = RepClass::CA;
    } else if (o.kind == "3part-uca") {
      g = gen_uca_gadget(inst, o.relaxed);
      f.cls = RepClass::UCA;
    } else {
      throw Error(ErrorKind::InvalidInput, "unknown generator " + o.kind);
    }
    f.graph = g.graph;
    f.partial = g.partial;
    f.names = g.names;
    if (!o.partition.empty()) {
      if (o.kind != "3part-hca") throw Error(ErrorKind::InvalidInput, "--partition only applies to 3part-hca");
      f.representation = partition_to_extension(inst, parse_partition(o.partition), o.relaxed);
    }
  }
  note(instance_summary(f));
  write_output(serialize_instance(f), o.out);
  return kOk;
}

int cmd_oracle(const std::string& path, const std::string& cls_name, OracleBounds bounds, const std::string& out) {
  InstanceFile f = load(path);
  RepClass cls = class_or_tag(cls_name, f);
  Extension e = oracle_extend(f.graph, f.partial, cls, bounds);
  if (!e.ok()) {
    std::cout << "NO\n";
    return kNo;
  }
  f.cls = cls;
  f.representation = std::move(e.representation);
  write_output(serialize_instance(f), out);
  return kOk;
}

int cmd_uca_check(const std::string& path, const std::string& cert_path, bool relax, const std::string& out) {
  InstanceFile f = load(path);
  UcaCertificate cert = parse_certificate(read_file(cert_path), f.names);
  CertificateResult res = check_certificate(f.graph, f.partial, cert, relax);
  if (!res.feasible) {
    std::cout << "INFEASIBLE: " << res.reason << "\n";
    return kNo;
  }
  std::cout << "FEASIBLE\n";
  if (!res.verification.ok())
    std::cout << "the realized arcs do not form a valid extension:\n" << res.verification.to_text() << "\n";
  f.cls = RepClass::UCA;
  f.representation = std::move(res.representation);
  write_output(serialize_instance(f), out);
  return res.verification.ok() ? kOk : kNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partial representation extension for circular-arc graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--quiet", quiet, "Suppress the summary lines on stderr");

  std::string file, cls, rep, out, cert;
  auto* verify = app.add_subcommand("verify", "Check a representation against an instance");
  verify->add_option("file", file, "Instance file")->required();
  verify->add_option("--class", cls, "Class to check (default: the file's class tag)");
  verify->add_option("--rep", rep, "Take the representation from this file instead");

  auto* extend = app.add_subcommand("extend", "Extend the predrawn arcs with one of the solvers");
  extend->add_option("file", file, "Instance file")->required();
  extend->add_option("--class", cls, "nphca, phca, nhca or hca (default: the file's class tag)");
  extend->add_option("-o,--output", out, "Output file (default: stdout)");

  GenOptions gen;
  auto* g = app.add_subcommand("gen", "Generate an instance");
  g->add_option("kind", gen.kind, "3part-hca, 3part-ca, 3part-uca or random")->required();
  g->add_option("--n", gen.n, "Number of groups");
  g->add_option("--t", gen.t, "Group target");
  g->add_option("--s", gen.s, "Comma-separated elements");
  g->add_flag("--relaxed", gen.relaxed, "Drop the size window and the 3n count");
  g->add_option("--partition", gen.partition, "Groups of element indices, e.g. 0,1,4/2,3,5, to include an extension");
  g->add_option("--class", gen.cls, "Class for random instances");
  g->add_option("--size", gen.size, "Vertex count for random instances");
  g->add_option("--seed", gen.seed, "Seed for random instances");
  g->add_option("-o,--output", gen.out, "Output file (default: stdout)");

  OracleBounds bounds;
  auto* oracle = app.add_subcommand("oracle", "Decide a tiny instance by exhaustive search");
  oracle->add_option("file", file, "Instance file")->required();
  oracle->add_option("--class", cls, "Class (default: the file's class tag)");
  oracle->add_option("--bounds-free", bounds.max_free, "Most free vertices");
  oracle->add_option("--bounds-anchors", bounds.max_anchors, "Most predrawn endpoints");
  oracle->add_option("-o,--output", out, "Output file (default: stdout)");

  bool relax = false;
  auto* uca = app.add_subcommand("uca-check", "Check a unit certificate");
  uca->add_option("file", file, "Instance file")->required();
  uca->add_option("certificate", cert, "Certificate file")->required();
  uca->add_flag("--relax-strict", relax, "Treat strict bounds as non-strict");
  uca->add_option("-o,--output", out, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  if (const char* threads = std::getenv("ARCX_THREADS")) {
    char* end = nullptr;
    long cap = std::strtol(threads, &end, 10);
    if (end == threads || *end != '\0' || cap < 1) {
      std::cerr << "error: ARCX_THREADS must be a positive integer\n";
      return kInput;
    }
  }

  try {
    if (*verify) return cmd_verify(file, cls, rep);
    if (*extend) return cmd_extend(file, cls, out);
    if (*g) return cmd_gen(gen);
    if (*oracle) return cmd_oracle(file, cls, bounds, out);
    if (*uca) return cmd_uca_check(file, cert, relax, out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_for(e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInput;
}
