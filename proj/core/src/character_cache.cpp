#include "hurwitz/partition.hpp"

#include <json.hpp>

#include <fstream>
#include <random>
#include <sstream>

namespace hurwitz {

using json = nlohmann::ordered_json;

std::string CharacterTable::to_json() const
{
  json doc;
  doc["schema"] = 1;
  doc["degree"] = degree_;
  json parts = json::array();
  for (const auto& p : partitions_)
    parts.push_back(std::vector<int>(p.parts().begin(), p.parts().end()));
  doc["partitions"] = std::move(parts);
  json rows = json::array();
  const std::size_t n = partitions_.size();
  for (std::size_t l = 0; l < n; ++l) {
    json row = json::array();
    for (std::size_t m = 0; m < n; ++m)
      row.push_back(std::to_string(values_[l * n + m]));
    rows.push_back(std::move(row));
  }
  doc["characters"] = std::move(rows);
  return doc.dump(1) + "\n";
}

CharacterTable CharacterTable::from_json(const std::string& text)
{
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("character table: ") + e.what());
  }
  if (doc.value("schema", 0) != 1)
    throw std::runtime_error("character table: unsupported schema");

  CharacterTable t;
  t.degree_ = doc.at("degree").get<int>();
  for (const auto& p : doc.at("partitions"))
    t.partitions_.emplace_back(p.get<std::vector<int>>());
  if (t.partitions_ != enumerate_partitions(t.degree_))
    throw std::runtime_error("character table: partitions not canonical for degree " +
                             std::to_string(t.degree_));

  const std::size_t n = t.partitions_.size();
  const auto& rows = doc.at("characters");
  if (rows.size() != n)
    throw std::runtime_error("character table: wrong row count");
  t.values_.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n)
      throw std::runtime_error("character table: wrong column count");
    for (const auto& cell : row)
      t.values_.push_back(std::stoll(cell.get<std::string>()));
  }

  // Cheap integrity checks before the table is trusted.
  Integer sum_sq = 0;
  for (std::size_t l = 0; l < n; ++l) {
    if (Integer(static_cast<long>(t.dim(l))) != dim_of(t.partitions_[l]))
      throw std::runtime_error("character table: dimension mismatch");
    sum_sq += Integer(static_cast<long>(t.dim(l))) * t.dim(l);
  }
  if (sum_sq != factorial(static_cast<unsigned>(t.degree_)))
    throw std::runtime_error("character table: sum of squared dimensions != d!");
  return t;
}

std::filesystem::path character_cache_path(const std::filesystem::path& dir, int degree)
{
  return dir / ("chartab_" + std::to_string(degree) + ".json");
}

CharacterTable load_or_build_character_table(int degree,
                                             const std::optional<std::filesystem::path>& dir)
{
  if (!dir) {
    auto t = CharacterTable::build(degree);
    t.publish();
    return t;
  }

  const auto path = character_cache_path(*dir, degree);
  if (std::filesystem::exists(path)) {
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      auto t = CharacterTable::from_json(buf.str());
      if (t.degree() == degree) {
        t.publish();
        return t;
      }
    } catch (const std::exception&) {
      // Corrupt or stale entry: rebuild and overwrite below.
    }
  }

  auto t = CharacterTable::build(degree);
  std::filesystem::create_directories(*dir);
  std::random_device rd;
  const auto tmp = path.string() + ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << t.to_json();
    if (!out)
      throw std::runtime_error("failed writing " + tmp);
  }
  std::filesystem::rename(tmp, path);
  t.publish();
  return t;
}

} // namespace hurwitz
