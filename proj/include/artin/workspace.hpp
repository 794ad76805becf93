#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "artin/lcm_hom.hpp"

namespace artin {

struct Options {
  std::size_t cutoff = kDefaultLcmCutoff;
  int radius = 2;
  int bound = 4;
};

/// Named presentations and maps. Names are unique; a map may only refer to
/// presentations that are already loaded.
class Workspace {
 public:
  void add(PresentationPtr p);
  void add(GeneratorMap m);

  /// Loads a file holding any number of `presentation` and `map` blocks.
  void load_text(std::string_view text);
  void load_file(const std::string& path);

  PresentationPtr presentation(const std::string& name) const;
  const GeneratorMap& map(const std::string& name) const;
  bool has_presentation(const std::string& name) const;
  bool has_map(const std::string& name) const;

  const std::vector<PresentationPtr>& presentations() const { return presentations_; }
  const std::vector<GeneratorMap>& maps() const { return maps_; }
  bool empty() const { return presentations_.empty() && maps_.empty(); }

 private:
  std::vector<PresentationPtr> presentations_;
  std::vector<GeneratorMap> maps_;
};

/// A2, B2, A3, TRI, QUAD, F2 with FOLD, FREEMAP and identity maps. With
/// `controls`, also F1, F2xy, AFF and the maps XY (t => x y) and BADL0.
Workspace stock_workspace(bool controls = false);

}  // namespace artin
