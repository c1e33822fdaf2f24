#include "rsd/centers_io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rsd {

CenterSet parse_centers_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(std::string("class center file: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("classes") || !doc["classes"].is_array()) {
    throw std::runtime_error("class center file: expected an object with a \"classes\" array");
  }
  const int bits = doc.value("resolution_bits", 8);
  const auto& classes = doc["classes"];
  if (classes.size() < 2) throw std::runtime_error("class center file: need at least 2 classes");

  const auto dims = classes[0].at("center").size();
  Eigen::Array<std::uint32_t, Eigen::Dynamic, Eigen::Dynamic> centers(classes.size(), dims);
  std::vector<std::string> names;
  for (std::size_t j = 0; j < classes.size(); ++j) {
    const auto& c = classes[j];
    const auto& center = c.at("center");
    if (!center.is_array() || center.size() != dims) {
      throw std::runtime_error("class center file: class " + std::to_string(j) + " has " +
                               std::to_string(center.size()) + " dimensions, expected " + std::to_string(dims));
    }
    for (std::size_t d = 0; d < dims; ++d) {
      const auto v = center[d].get<long long>();
      if (v < 0) throw std::runtime_error("class center file: negative center value");
      centers(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(d)) = static_cast<std::uint32_t>(v);
    }
    names.push_back(c.value("name", "class" + std::to_string(j)));
  }
  return {ClassCenterFile::from_centers(centers, bits), std::move(names)};
}

std::string to_centers_json(const CenterSet& set) {
  nlohmann::ordered_json doc;
  doc["resolution_bits"] = set.file.resolution_bits();
  auto classes = nlohmann::ordered_json::array();
  for (int j = 0; j < set.file.classes(); ++j) {
    nlohmann::ordered_json c;
    c["name"] = j < static_cast<int>(set.names.size()) ? set.names[static_cast<std::size_t>(j)]
                                                        : "class" + std::to_string(j);
    const auto center = set.file.center(j);
    c["center"] = std::vector<std::uint32_t>(center.begin(), center.end());
    classes.push_back(std::move(c));
  }
  doc["classes"] = std::move(classes);
  return doc.dump(2) + "\n";
}

CenterSet read_centers_file(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path.string());
  std::stringstream ss;
  ss << f.rdbuf();
  try {
    return parse_centers_json(ss.str());
  } catch (const std::exception& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

void write_centers_file(const std::filesystem::path& path, const CenterSet& set) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << to_centers_json(set);
}

CenterSet road_sign_centers() {
  Eigen::Array<std::uint32_t, 4, 2> centers;
  centers << 127, 128,  //
      88, 151,          //
      116, 157,         //
      109, 180;
  return {ClassCenterFile::from_centers(centers), {"background", "yellow", "red1", "red2"}};
}

}  // namespace rsd
