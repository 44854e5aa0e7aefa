#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "armlab/catalog.hpp"
#include "armlab/property_lab.hpp"

namespace armlab {

// Config parse/validation failure with the source position of the offending
// token or key.
struct ConfigError : std::runtime_error {
  int line, col;
  ConfigError(int line_, int col_, const std::string& msg)
      : std::runtime_error("config:" + std::to_string(line_) + ":" +
                           std::to_string(col_) + ": " + msg),
        line(line_),
        col(col_) {}
};

// One named structure definition, kept as a small recipe so ring references
// can be resolved against previously defined structures and the catalog.
struct StructDef {
  enum class Kind { Ring, Monoid } kind = Kind::Ring;
  std::string name;
  std::string ctor;          // zn, product, matrix, ..., cyclic, table, ...
  int line = 0, col = 0;     // where the definition starts
  std::vector<std::string> refs;   // referenced structure names
  std::vector<std::int64_t> ints;  // scalar arguments (modulus, dimension, ...)
  std::vector<std::vector<std::int64_t>> rows;  // explicit tables
  std::vector<std::vector<std::int64_t>> rows2; // second table (mul)
  std::optional<int> one;
};

struct BudgetOptions {
  int ring_size_cap = 4096;
  int ideal_cap = 64;
  ArmBounds bounds;
  int workers = 1;
};

struct OutputOptions {
  std::string format = "text";  // "text" | "json"
  std::string path;             // empty = stdout
};

struct Config {
  std::vector<StructDef> structures;  // in definition order
  BudgetOptions budget;
  OutputOptions output;
};

// Parses the documented key-value config format. Throws ConfigError with
// line/column on any syntax error, unknown key, or malformed value.
Config parse_config(const std::string& text);

// Constructs and validates every structure definition (in order) and adds it
// to the catalog. Definitions may reference earlier definitions or built-in
// catalog names. Axiom violations surface as ConfigError at the definition.
void apply_config(const Config& cfg, Catalog& cat);

}  // namespace armlab
