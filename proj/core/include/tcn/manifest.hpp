#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tcn/common.hpp"

namespace tcn::data {

enum class Split { kTrain, kValidation, kTest };

const char* to_string(Split s);
Split split_from_string(const std::string& s);

/// Ratios or absolute typeface counts for train/validation/test.
struct SplitSpec {
  double train = 0.7;
  double validation = 0.1;
  double test = 0.2;
  bool counts = false;  // when true, fields are absolute typeface counts

  static SplitSpec ratios(double tr, double va, double te);
  static SplitSpec absolute(int tr, int va, int te);
};

struct ManifestEntry {
  std::string image_path;  // relative to the manifest directory
  int typeface_id = 0;
  int content_id = 0;
  Split split = Split::kTrain;
};

/// Enumerates images, labels and the typeface-level split. N = n_contents,
/// T = n_typefaces. Splits partition typefaces disjointly.
struct DatasetManifest {
  std::vector<ManifestEntry> entries;
  int n_contents = 0;
  int n_typefaces = 0;
  std::vector<std::string> charset;        // codepoints ("U+0041") or shape ids
  std::map<int, Split> split_assignment;   // typeface_id -> split
  uint64_t seed = 0;
  std::filesystem::path root;              // directory the manifest was loaded from

  std::vector<int> typefaces_in(Split s) const;
  std::vector<size_t> entry_indices(Split s) const;
  std::optional<size_t> find(int typeface_id, int content_id) const;
};

/// Checks split disjointness, duplicate (typeface, content) pairs, id ranges.
void validate_manifest(const DatasetManifest& m);

/// Seeded shuffle of typeface ids, then assignment per `spec`. Count mode is
/// exact; ratio mode uses largest-remainder rounding.
std::map<int, Split> assign_splits(int n_typefaces, const SplitSpec& spec, uint64_t seed);

// Persistence: <stem>.csv (path,typeface_id,content_id,split) next to
// <stem>.json (n_contents, n_typefaces, charset, split_assignment, seed).
void save_manifest(const DatasetManifest& m, const std::filesystem::path& csv_path);
DatasetManifest load_manifest(const std::filesystem::path& csv_path);

}  // namespace tcn::data
