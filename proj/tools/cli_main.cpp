// Command-line front end for the sepflux shared library. Exit codes are a
// stable contract: 0 ok, 2 parse error, 3 invariant violation, 4 hypothesis
// violation, 5 bad class, 6 internal check failure.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "sepflux/sepflux.h"

namespace {

struct SurfaceDeleter {
  void operator()(sfx_surface* s) const { sfx_surface_free(s); }
};
struct WordDeleter {
  void operator()(sfx_word* w) const { sfx_word_free(w); }
};
struct SliceDeleter {
  void operator()(sfx_slice* s) const { sfx_slice_free(s); }
};

using SurfacePtr = std::unique_ptr<sfx_surface, SurfaceDeleter>;
using WordPtr = std::unique_ptr<sfx_word, WordDeleter>;
using SlicePtr = std::unique_ptr<sfx_slice, SliceDeleter>;

[[noreturn]] void die(sfx_status status) {
  std::cerr << "sepflux: " << sfx_last_error() << "\n";
  std::exit(static_cast<int>(status));
}

void check(sfx_status status) {
  if (status != SFX_OK) {
    die(status);
  }
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    std::cerr << "sepflux: cannot open '" << path << "'\n";
    std::exit(2);
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

SurfacePtr load_surface(const std::string& path) {
  const auto text = read_input(path);
  sfx_surface* raw = nullptr;
  check(sfx_surface_from_json(text.c_str(), &raw));
  return SurfacePtr(raw);
}

WordPtr parse_word(const sfx_surface* surface, const std::string& text) {
  sfx_word* raw = nullptr;
  check(sfx_word_parse(surface, text.c_str(), &raw));
  return WordPtr(raw);
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::string item;
  std::istringstream stream(text);
  while (std::getline(stream, item, ',')) {
    if (!item.empty()) {
      items.push_back(item);
    }
  }
  return items;
}

std::vector<const char*> c_strings(const std::vector<std::string>& items) {
  std::vector<const char*> out;
  out.reserve(items.size());
  for (const auto& item : items) {
    out.push_back(item.c_str());
  }
  return out;
}

std::vector<std::int64_t> parse_coords(const std::string& text) {
  std::vector<std::int64_t> coords;
  for (const auto& item : split_list(text)) {
    try {
      std::size_t used = 0;
      coords.push_back(std::stoll(item, &used));
      if (used != item.size()) {
        throw std::invalid_argument(item);
      }
    } catch (const std::exception&) {
      std::cerr << "sepflux: invalid class coordinate '" << item << "'\n";
      std::exit(2);
    }
  }
  return coords;
}

std::string word_text(const sfx_word* word) {
  char* raw = nullptr;
  check(sfx_word_print(word, &raw));
  std::string text(raw);
  sfx_string_free(raw);
  return text;
}

int cmd_classify(const std::string& path) {
  const auto surface = load_surface(path);
  sfx_classification q{};
  check(sfx_surface_classify(surface.get(), &q));
  std::cout << "{\"genus\":";
  if (q.genus_is_infinite) {
    std::cout << "\"inf\"";
  } else {
    std::cout << q.genus;
  }
  std::cout << ",\"boundary\":" << q.boundary
            << ",\"ends\":" << q.ends
            << ",\"genus_ends\":" << q.genus_ends << "}\n";
  return 0;
}

int cmd_rank(const std::string& path) {
  const auto surface = load_surface(path);
  std::int64_t rank = 0;
  const auto status = sfx_h1_rank(surface.get(), &rank);
  if (status == SFX_ERR_HYPOTHESIS) {
    std::cout << "hypothesis violated\n";
    std::cerr << "sepflux: " << sfx_last_error() << "\n";
    return 4;
  }
  check(status);
  std::cout << rank << "\n";
  return 0;
}

int cmd_eval(const std::string& path, const std::string& class_coords,
             const std::string& partition, const std::string& word_expr) {
  const auto surface = load_surface(path);
  const auto word = parse_word(surface.get(), word_expr);
  std::int64_t value = 0;
  if (!partition.empty()) {
    const auto ids = split_list(partition);
    const auto raw = c_strings(ids);
    check(sfx_phi_partition(surface.get(), raw.data(), raw.size(), word.get(), &value));
  } else {
    const auto coords = parse_coords(class_coords);
    check(sfx_phi_coords(surface.get(), coords.data(), coords.size(), word.get(), &value));
  }
  std::cout << value << "\n";
  return 0;
}

int cmd_pair(const std::string& path) {
  const auto surface = load_surface(path);
  std::size_t dim = 0;
  check(sfx_pairing_matrix(surface.get(), nullptr, 0, &dim));
  std::vector<std::int64_t> entries(dim * dim, 0);
  check(sfx_pairing_matrix(surface.get(), entries.data(), entries.size(), &dim));
  bool identity = true;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      if (j > 0) {
        std::cout << ' ';
      }
      std::cout << entries[i * dim + j];
      if (entries[i * dim + j] != (i == j ? 1 : 0)) {
        identity = false;
      }
    }
    std::cout << "\n";
  }
  if (!identity) {
    std::cerr << "sepflux: pairing matrix is not the identity\n";
    return 6;
  }
  return 0;
}

int cmd_factor(const std::string& path, const std::string& word_expr) {
  const auto surface = load_surface(path);
  const auto word = parse_word(surface.get(), word_expr);
  sfx_word* kappa_raw = nullptr;
  sfx_word* residual_raw = nullptr;
  check(sfx_factor(surface.get(), word.get(), &kappa_raw, &residual_raw));
  const WordPtr kappa(kappa_raw);
  const WordPtr residual(residual_raw);
  std::cout << "kappa: " << word_text(kappa.get()) << "\n";
  std::cout << "residual: " << word_text(residual.get()) << "\n";
  return 0;
}

int cmd_slice(const std::string& path, const std::string& partition,
              std::int64_t depth, const std::string& out_path) {
  const auto surface = load_surface(path);
  const auto ids = split_list(partition);
  const auto raw_ids = c_strings(ids);
  sfx_slice* raw = nullptr;
  check(sfx_slice_build(surface.get(), raw_ids.data(), raw_ids.size(), depth, &raw));
  const SlicePtr slice(raw);

  char* text = nullptr;
  check(sfx_slice_export_text(slice.get(), &text));
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    sfx_string_free(text);
    std::cerr << "sepflux: cannot write '" << out_path << "'\n";
    return 2;
  }
  file << text;
  sfx_string_free(text);

  std::size_t vertices = 0;
  std::size_t edges = 0;
  check(sfx_slice_counts(slice.get(), &vertices, &edges));
  int proper = 0;
  check(sfx_slice_is_proper(slice.get(), &proper));
  std::cout << "vertices: " << vertices << "\n";
  std::cout << "edges: " << edges << "\n";
  std::cout << "proper: " << (proper ? "true" : "false") << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"separating-homology flux machinery for infinite-type surfaces"};
  app.require_subcommand(1);

  std::string path;
  std::string word_expr;
  std::string class_coords;
  std::string partition;
  std::string out_path;
  std::int64_t depth = 0;

  auto* classify = app.add_subcommand("classify", "print the classification quadruple");
  classify->add_option("surface", path, "surface document ('-' for stdin)")->required();

  auto* rank = app.add_subcommand("rank", "print the rank of H^1 of the pure mapping class group");
  rank->add_option("surface", path, "surface document ('-' for stdin)")->required();

  auto* eval = app.add_subcommand("eval", "evaluate the flux of a word through a class");
  eval->add_option("surface", path, "surface document ('-' for stdin)")->required();
  auto* coords_opt = eval->add_option("--class", class_coords, "class coordinates, e.g. 2,-1");
  auto* partition_opt = eval->add_option("--partition", partition, "end ids on the positive side");
  eval->add_option("--word", word_expr, "mapping-class word")->required();
  coords_opt->excludes(partition_opt);
  partition_opt->excludes(coords_opt);

  auto* pair = app.add_subcommand("pair", "print the basis/dual-basis pairing matrix");
  pair->add_option("surface", path, "surface document ('-' for stdin)")->required();

  auto* factor = app.add_subcommand("factor", "split a word into kappa and residual parts");
  factor->add_option("surface", path, "surface document ('-' for stdin)")->required();
  factor->add_option("--word", word_expr, "mapping-class word")->required();

  auto* slice = app.add_subcommand("slice", "export a colored slice of the curve graph");
  slice->add_option("surface", path, "surface document ('-' for stdin)")->required();
  slice->add_option("--partition", partition, "end ids on the positive side")->required();
  slice->add_option("--depth", depth, "maximum cut level")->required();
  slice->add_option("--out", out_path, "output path for the graph file")->required();

  CLI11_PARSE(app, argc, argv);

  if (classify->parsed()) return cmd_classify(path);
  if (rank->parsed()) return cmd_rank(path);
  if (eval->parsed()) {
    if (class_coords.empty() && partition.empty()) {
      std::cerr << "sepflux: eval requires --class or --partition\n";
      return static_cast<int>(CLI::ExitCodes::RequiredError);
    }
    return cmd_eval(path, class_coords, partition, word_expr);
  }
  if (pair->parsed()) return cmd_pair(path);
  if (factor->parsed()) return cmd_factor(path, word_expr);
  if (slice->parsed()) return cmd_slice(path, partition, depth, out_path);
  return 0;
}
