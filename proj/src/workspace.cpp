#include "artin/workspace.hpp"

#include <fstream>
#include <sstream>

namespace artin {

namespace {

const char* const kStockPresentations = R"(
presentation A2
generators s t
bond s t 3

presentation B2
generators s t
bond s t 4

presentation A3
generators s1 s2 s3
bond s1 s2 3
bond s2 s3 3

# a and b free, the other pairs braid
presentation TRI
generators a b c
bond a b inf
bond a c 3
bond b c 3

presentation QUAD
generators a b c d
bond a b 3
bond c d 3
bond a c inf
bond b d inf

presentation F2
generators s t
bond s t inf
)";

const char* const kStockMaps = R"(
map FOLD from B2 to A3
s -> s1 s3
t -> s2

map FREEMAP from F2 to QUAD
s -> a b
t -> c d

map ID_B2 from B2 to B2
s -> s
t -> t

map ID_TRI from TRI to TRI
a -> a
b -> b
c -> c

map ID_QUAD from QUAD to QUAD
a -> a
b -> b
c -> c
d -> d
)";

const char* const kControlPresentations = R"(
presentation F1
generators t

presentation F2xy
generators x y
bond x y inf

# affine type A~2: all bonds finite, not spherical
presentation AFF
generators a b c
bond a b 3
bond b c 3
bond a c 3
)";

const char* const kControlMaps = R"(
map XY from F1 to F2xy
t => x y

# s and t share an image
map BADL0 from A2 to A3
s -> s1 s2
t -> s2 s3
)";

bool starts_block(const std::string& line) {
  std::istringstream in(line);
  std::string head;
  in >> head;
  return head == "presentation" || head == "map";
}

std::string first_token(const std::string& block) {
  std::istringstream in(block);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream words(line);
    std::string head;
    if (words >> head && head[0] != '#') return head;
  }
  return {};
}

}  // namespace

void Workspace::add(PresentationPtr p) {
  if (has_presentation(p->name()) || has_map(p->name())) throw InputError("name '" + p->name() + "' is already defined");
  presentations_.push_back(std::move(p));
}

void Workspace::add(GeneratorMap m) {
  if (has_presentation(m.name) || has_map(m.name)) throw InputError("name '" + m.name + "' is already defined");
  maps_.push_back(std::move(m));
}

void Workspace::load_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> blocks;
  std::string line;
  std::string pending;  // comments and blank lines before the first header
  while (std::getline(in, line)) {
    if (starts_block(line)) blocks.emplace_back();
    if (blocks.empty()) {
      std::istringstream words(line);
      std::string head;
      if (words >> head && head[0] != '#') throw InputError("expected 'presentation' or 'map' header, got '" + line + "'");
      continue;
    }
    blocks.back() += line + "\n";
  }
  const PresentationLookup lookup = [this](const std::string& name) {
    return has_presentation(name) ? presentation(name) : nullptr;
  };
  for (const std::string& block : blocks) {
    if (first_token(block) == "presentation")
      add(parse_presentation(block));
    else
      add(parse_map(block, lookup));
  }
}

void Workspace::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  try {
    load_text(text.str());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

PresentationPtr Workspace::presentation(const std::string& name) const {
  for (const auto& p : presentations_)
    if (p->name() == name) return p;
  throw InputError("unknown presentation '" + name + "'");
}

const GeneratorMap& Workspace::map(const std::string& name) const {
  for (const auto& m : maps_)
    if (m.name == name) return m;
  throw InputError("unknown map '" + name + "'");
}

bool Workspace::has_presentation(const std::string& name) const {
  for (const auto& p : presentations_)
    if (p->name() == name) return true;
  return false;
}

bool Workspace::has_map(const std::string& name) const {
  for (const auto& m : maps_)
    if (m.name == name) return true;
  return false;
}

Workspace stock_workspace(bool controls) {
  Workspace ws;
  ws.load_text(kStockPresentations);
  if (controls) ws.load_text(kControlPresentations);
  ws.load_text(kStockMaps);
  if (controls) ws.load_text(kControlMaps);
  return ws;
}

}  // namespace artin
