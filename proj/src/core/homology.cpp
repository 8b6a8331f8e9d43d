#include "core/homology.hpp"

#include <algorithm>
#include <unordered_set>

namespace sepflux {

namespace {

void require_filled(const SurfaceSpec& spec) {
  if (spec.boundary_count != 0 || !spec.puncture_ids.empty()) {
    fail(Status::invariant_violation, "surface is not filled; apply fill_and_cap first");
  }
}

void require_same_base(const SeparatingClass& a, const SeparatingClass& b) {
  if (a.base != b.base) {
    fail(Status::invariant_violation, "classes live on different surfaces");
  }
}

}  // namespace

bool SeparatingClass::is_zero() const {
  return std::all_of(coords.begin(), coords.end(),
                     [](std::int64_t c) { return c == 0; });
}

SeparatingClass zero_class(const SurfaceSpec& filled) {
  require_filled(filled);
  const auto n = filled.arm_count();
  const auto len = n > 0 ? static_cast<std::size_t>(n - 1) : 0u;
  return SeparatingClass{filled, std::vector<std::int64_t>(len, 0)};
}

SeparatingClass basis_class(const SurfaceSpec& filled, std::size_t index) {
  auto v = zero_class(filled);
  if (index >= v.coords.size()) {
    fail(Status::bad_class, "basis index out of range");
  }
  v.coords[index] = 1;
  return v;
}

SeparatingClass negate(const SeparatingClass& v) {
  auto out = v;
  for (auto& c : out.coords) {
    c = -c;
  }
  return out;
}

SeparatingClass add(const SeparatingClass& a, const SeparatingClass& b) {
  require_same_base(a, b);
  auto out = a;
  for (std::size_t i = 0; i < out.coords.size(); ++i) {
    out.coords[i] += b.coords[i];
  }
  return out;
}

SeparatingClass class_of_partition(const SurfaceSpec& filled, const EndPartition& partition) {
  require_filled(filled);
  auto v = zero_class(filled);
  std::unordered_set<std::string> side;
  for (const auto& id : partition.positive_side) {
    if (!filled.is_arm(id)) {
      fail(Status::bad_class, "unknown end identifier: " + id);
    }
    side.insert(id);
  }
  const auto n = filled.arm_ids.size();
  if (n == 0) {
    return v;
  }
  const std::int64_t last = side.count(filled.arm_ids[n - 1]) ? 1 : 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const std::int64_t in = side.count(filled.arm_ids[i]) ? 1 : 0;
    v.coords[i] = in - last;
  }
  return v;
}

SeparatingClass class_of_partition_on(const SurfaceSpec& spec, const EndPartition& partition) {
  EndPartition pushed;
  for (const auto& id : partition.positive_side) {
    if (spec.is_arm(id)) {
      pushed.positive_side.push_back(id);
    } else if (!spec.is_puncture(id)) {
      fail(Status::bad_class, "unknown end identifier: " + id);
    }
  }
  return class_of_partition(fill_and_cap(spec), pushed);
}

std::optional<EndPartition> is_simple(const SeparatingClass& v) {
  const auto& arms = v.base.arm_ids;
  const bool all_01 = std::all_of(v.coords.begin(), v.coords.end(),
                                  [](std::int64_t c) { return c == 0 || c == 1; });
  if (all_01) {
    EndPartition p;
    for (std::size_t i = 0; i < v.coords.size(); ++i) {
      if (v.coords[i] == 1) {
        p.positive_side.push_back(arms[i]);
      }
    }
    return p;
  }
  const bool all_m10 = std::all_of(v.coords.begin(), v.coords.end(),
                                   [](std::int64_t c) { return c == 0 || c == -1; });
  if (all_m10) {
    // v = sum over a side containing the last arm end.
    EndPartition p;
    for (std::size_t i = 0; i < v.coords.size(); ++i) {
      if (v.coords[i] == 0) {
        p.positive_side.push_back(arms[i]);
      }
    }
    p.positive_side.push_back(arms.back());
    return p;
  }
  return std::nullopt;
}

std::vector<std::pair<std::int64_t, std::size_t>> decompose(const SeparatingClass& v) {
  std::vector<std::pair<std::int64_t, std::size_t>> terms;
  for (std::size_t i = 0; i < v.coords.size(); ++i) {
    if (v.coords[i] != 0) {
      terms.emplace_back(v.coords[i], i);
    }
  }
  return terms;
}

std::int64_t sep_rank(const SurfaceSpec& spec) {
  return std::max<std::int64_t>(spec.arm_count() - 1, 0);
}

bool cuts(const SeparatingClass& v, const std::string& from_end, const std::string& to_end) {
  if (v.is_zero()) {
    fail(Status::bad_class, "zero class");
  }
  const auto side = is_simple(v);
  if (!side) {
    fail(Status::bad_class, "class not simple");
  }
  for (const auto* id : {&from_end, &to_end}) {
    if (!v.base.is_arm(*id)) {
      fail(Status::bad_class, "unknown end identifier: " + *id);
    }
  }
  const auto& pos = side->positive_side;
  const bool from_in = std::find(pos.begin(), pos.end(), from_end) != pos.end();
  const bool to_in = std::find(pos.begin(), pos.end(), to_end) != pos.end();
  return from_in != to_in;
}

}  // namespace sepflux
