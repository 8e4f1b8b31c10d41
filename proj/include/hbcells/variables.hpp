#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hbcells/errors.hpp"

namespace hbcells {

// An ordered list of distinct variable names. Cheap to copy; copies share the
// same underlying storage, so identity comparison is usually a pointer check.
class VariableSet {
 public:
  VariableSet() : data_(std::make_shared<Data>()) {}

  explicit VariableSet(std::vector<std::string> names) {
    auto data = std::make_shared<Data>();
    data->names = std::move(names);
    for (std::size_t i = 0; i < data->names.size(); ++i) {
      if (data->names[i].empty()) throw validation_error("empty variable name");
      if (!data->index.emplace(data->names[i], i).second)
        throw validation_error("duplicate variable name '" + data->names[i] + "'");
    }
    data_ = std::move(data);
  }

  VariableSet(std::initializer_list<std::string> names)
      : VariableSet(std::vector<std::string>(names)) {}

  std::size_t size() const { return data_->names.size(); }
  const std::string& name(std::size_t i) const { return data_->names.at(i); }
  const std::vector<std::string>& names() const { return data_->names; }

  std::optional<std::size_t> find(std::string_view name) const {
    auto it = data_->index.find(std::string(name));
    if (it == data_->index.end()) return std::nullopt;
    return it->second;
  }

  std::size_t index(std::string_view name) const {
    auto i = find(name);
    if (!i) throw ambient_mismatch("variable '" + std::string(name) + "' is not in the ring");
    return *i;
  }

  bool contains(std::string_view name) const { return find(name).has_value(); }

  // Returns a new set with `extra` appended (names already present are skipped).
  VariableSet extended(const std::vector<std::string>& extra) const {
    auto names = data_->names;
    for (const auto& n : extra)
      if (!contains(n)) names.push_back(n);
    return VariableSet(std::move(names));
  }

  // A name not yet used in this set, derived from `stem`.
  std::string fresh_name(const std::string& stem) const {
    if (!contains(stem)) return stem;
    for (int i = 1;; ++i) {
      auto candidate = stem + "_" + std::to_string(i);
      if (!contains(candidate)) return candidate;
    }
  }

  friend bool operator==(const VariableSet& a, const VariableSet& b) {
    return a.data_ == b.data_ || a.data_->names == b.data_->names;
  }

 private:
  struct Data {
    std::vector<std::string> names;
    std::unordered_map<std::string, std::size_t> index;
  };
  std::shared_ptr<const Data> data_;
};

}  // namespace hbcells
