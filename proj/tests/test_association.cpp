// Copyright 2026 The rtmdigit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "rtm/association.hpp"
#include "rtm/errors.hpp"

using namespace rtm;

namespace {

Detection milepost_at(int cx, int half = 10) {
  return {ComponentClass::kMilepost, {cx - half, 5, cx + half, 30}, 1.0};
}

Detection component_at(ComponentClass c, int x_min, int x_max) {
  return {c, {x_min, 100, x_max, 130}, 1.0};
}

// Zone of the nearest anchor centre, ties to the left; empty without anchors.
std::vector<double> nearest_anchor(const Detection& comp,
                                   const std::vector<MilepostReading>& mps) {
  const double cx = comp.box.center_x();
  const MilepostReading* best = nullptr;
  double best_d = 0;
  for (const auto& m : mps) {
    const double c = m.first.box.center_x();
    const double d = std::abs(c - cx);
    if (!best || d < best_d || (d == best_d && c < best->first.box.center_x())) {
      best = &m;
      best_d = d;
    }
  }
  if (!best) return {};
  auto v = best->second;
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

struct RandomLayout {
  int width;
  std::vector<MilepostReading> mileposts;
  std::vector<Detection> components;
};

RandomLayout random_layout(std::mt19937_64& rng) {
  RandomLayout l;
  l.width = 50 + static_cast<int>(rng() % 2000);
  const int n = static_cast<int>(rng() % 6);
  std::vector<int> centres;
  while (static_cast<int>(centres.size()) < n) {
    const int half = static_cast<int>(rng() % 8);
    const int c = half + static_cast<int>(rng() % (l.width - 2 * half));
    // Distinct centres; equal centres make "nearest" ambiguous.
    if (std::find(centres.begin(), centres.end(), c) != centres.end()) continue;
    centres.push_back(c);
    l.mileposts.push_back({milepost_at(c, half), {static_cast<double>(centres.size())}});
  }
  const int m = 1 + static_cast<int>(rng() % 10);
  for (int i = 0; i < m; ++i) {
    const int x0 = static_cast<int>(rng() % l.width);
    const int x1 = x0 + static_cast<int>(rng() % (l.width - x0));
    l.components.push_back(component_at(ComponentClass::kSignal, x0, x1));
  }
  return l;
}

bool is_subset(const std::vector<double>& a, const std::vector<double>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

TEST_CASE("build_zones examples") {
  std::vector<MilepostReading> one{{milepost_at(333), {10}}};
  const auto z1 = build_zones(one, 400);
  REQUIRE(z1.size() == 1);
  CHECK(z1[0].left == 0.0);
  CHECK(z1[0].right == 400.0);

  std::vector<MilepostReading> two{{milepost_at(300), {11}}, {milepost_at(100), {10}}};
  const auto z2 = build_zones(two, 400);
  REQUIRE(z2.size() == 2);
  CHECK(z2[0].left == 0.0);
  CHECK(z2[0].right == 200.0);
  CHECK(z2[0].values == std::vector<double>{10});
  CHECK(z2[1].left == 200.0);
  CHECK(z2[1].right == 400.0);

  std::vector<MilepostReading> multi{{milepost_at(50), {23.4, 23.5}}};
  CHECK(build_zones(multi, 400)[0].values == std::vector<double>{23.4, 23.5});

  CHECK(build_zones({}, 400).empty());
  std::vector<MilepostReading> wrong{{component_at(ComponentClass::kSignal, 1, 5), {1}}};
  CHECK_THROWS_AS(build_zones(wrong, 400), InvalidArgument);
  CHECK_THROWS_AS(build_zones(one, 0), InvalidArgument);
}

TEST_CASE("associate examples") {
  std::vector<MilepostReading> two{{milepost_at(100), {10}}, {milepost_at(300), {11}}};
  const auto zones = build_zones(two, 400);
  CHECK(associate(component_at(ComponentClass::kSignal, 95, 105), zones, {0}) ==
        std::vector<double>{10});
  CHECK(associate(component_at(ComponentClass::kSignal, 290, 310), zones, {0}) ==
        std::vector<double>{11});
  // cx = 195
  CHECK(associate(component_at(ComponentClass::kSignal, 190, 200), zones, {10}) ==
        std::vector<double>{10, 11});
  CHECK(associate(component_at(ComponentClass::kSignal, 190, 200), zones, {0}) ==
        std::vector<double>{10});
  // A centre exactly on the shared edge goes left at zero tolerance.
  CHECK(associate(component_at(ComponentClass::kSignal, 195, 205), zones, {0}) ==
        std::vector<double>{10});
  CHECK(associate(component_at(ComponentClass::kSignal, 196, 205), zones, {0}) ==
        std::vector<double>{11});
  // Independent evaluation of neighbouring components.
  CHECK(associate(component_at(ComponentClass::kSignal, 145, 155), zones, {0}) ==
        std::vector<double>{10});
  CHECK(associate(component_at(ComponentClass::kSignal, 155, 165), zones, {0}) ==
        std::vector<double>{10});
  CHECK(associate(component_at(ComponentClass::kSignal, 1, 5), {}, {50}).empty());
}

TEST_CASE("shared values are reported once") {
  std::vector<MilepostReading> two{{milepost_at(100), {10, 11}}, {milepost_at(300), {11}}};
  const auto zones = build_zones(two, 400);
  CHECK(associate(component_at(ComponentClass::kSignal, 190, 200), zones, {20}) ==
        std::vector<double>{10, 11});
}

TEST_CASE("default tolerance scales with width") {
  CHECK(default_tolerance(4500) == 50.0);
  CHECK(default_tolerance(1125) == 12.5);
}

TEST_CASE("associate_all examples") {
  DetectionSet one{"img", 400, 200, {milepost_at(100), component_at(ComponentClass::kSignal, 50, 60)}};
  const std::vector<std::string> t1{"10", "S1"};
  const auto r1 = associate_all(one, t1, {0});
  REQUIRE(r1.records.size() == 1);
  CHECK(r1.records[0].mileposts == std::vector<double>{10});
  CHECK(r1.records[0].text == "S1");
  CHECK(r1.records[0].image_id == "img");
  CHECK(r1.warnings.empty());

  DetectionSet none{"img", 400, 200,
                    {component_at(ComponentClass::kSwitch, 10, 20),
                     component_at(ComponentClass::kSwitch, 200, 220)}};
  const std::vector<std::string> t2{"SW1", "SW2"};
  const auto r2 = associate_all(none, t2, {0});
  REQUIRE(r2.records.size() == 2);
  CHECK(r2.records[0].mileposts.empty());
  CHECK(r2.records[1].mileposts.empty());
  CHECK(r2.warnings.size() == 1);

  DetectionSet blank_mp{"img", 400, 200, {milepost_at(100), component_at(ComponentClass::kSignal, 50, 60)}};
  const std::vector<std::string> t3{"", "S1"};
  const auto r3 = associate_all(blank_mp, t3, {0});
  CHECK(r3.records[0].mileposts.empty());
  CHECK(r3.warnings.size() == 1);

  const std::vector<std::string> short_texts{"10"};
  CHECK_THROWS_AS(associate_all(one, short_texts, {0}), InvalidArgument);
}

TEST_CASE("records are ordered by milepost, class, x") {
  DetectionSet s{"img", 400, 200,
                 {component_at(ComponentClass::kSwitch, 310, 320), milepost_at(300),
                  component_at(ComponentClass::kSignal, 20, 30),
                  component_at(ComponentClass::kSignal, 10, 18), milepost_at(100),
                  component_at(ComponentClass::kCrossing, 280, 290)}};
  const std::vector<std::string> t{"A", "11", "B", "C", "10", "D"};
  const auto r = associate_all(s, t, {0});
  std::vector<std::string> order;
  for (const auto& rec : r.records) order.push_back(rec.text);
  CHECK(order == std::vector<std::string>{"C", "B", "D", "A"});
  // Records without a milepost sort last.
  std::vector<ComponentRecord> recs{{"i", ComponentClass::kSignal, "x", {}, {0, 0, 1, 1}, 1},
                                    {"i", ComponentClass::kSignal, "y", {3}, {5, 0, 6, 1}, 1}};
  sort_records(recs);
  CHECK(recs[0].text == "y");
}

TEST_CASE("zero tolerance zones tile the width") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 500; ++i) {
    const auto l = random_layout(rng);
    const auto zones = build_zones(l.mileposts, l.width);
    if (zones.empty()) continue;
    REQUIRE(zones.front().left == 0.0);
    REQUIRE(zones.back().right == static_cast<double>(l.width));
    for (std::size_t k = 0; k + 1 < zones.size(); ++k) {
      REQUIRE(zones[k].right == zones[k + 1].left);
      REQUIRE(zones[k].left <= zones[k].right);
    }
    // Every integer and half-integer centre lies in exactly one (left, right]
    // interval, the first one closed at 0.
    for (int x2 = 0; x2 <= 2 * (l.width - 1); ++x2) {
      const double cx = x2 / 2.0;
      int hits = 0;
      for (std::size_t k = 0; k < zones.size(); ++k) {
        const bool lo = k == 0 ? cx >= zones[k].left : cx > zones[k].left;
        hits += lo && cx <= zones[k].right;
      }
      REQUIRE(hits == 1);
      const Detection d = component_at(ComponentClass::kSignal, x2 / 2, (x2 + 1) / 2);
      REQUIRE(associate(d, zones, {0}).size() == 1);
    }
  }
}

TEST_CASE("tolerance monotonicity and nearest-anchor oracle") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 1000; ++i) {
    const auto l = random_layout(rng);
    const auto zones = build_zones(l.mileposts, l.width);
    for (const auto& c : l.components) {
      REQUIRE(associate(c, zones, {0}) == nearest_anchor(c, l.mileposts));
      double prev_t = 0;
      auto prev = associate(c, zones, {0});
      for (int k = 0; k < 4; ++k) {
        const double t = prev_t + static_cast<double>(rng() % 200) / 4.0;
        const auto cur = associate(c, zones, {t});
        REQUIRE(is_subset(prev, cur));
        prev = cur;
        prev_t = t;
      }
    }
  }
}

TEST_CASE("permuting components changes no individual result") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    auto l = random_layout(rng);
    DetectionSet s{"img", l.width, 200, {}};
    std::vector<std::string> texts;
    for (const auto& m : l.mileposts) {
      s.detections.push_back(m.first);
      texts.push_back(std::to_string(static_cast<int>(m.second[0])));
    }
    for (std::size_t k = 0; k < l.components.size(); ++k) {
      s.detections.push_back(l.components[k]);
      texts.push_back("S" + std::to_string(k));
    }
    const auto base = associate_all(s, texts, {12.5});
    std::vector<std::size_t> perm(s.detections.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    DetectionSet p{"img", l.width, 200, {}};
    std::vector<std::string> pt;
    for (std::size_t k : perm) {
      p.detections.push_back(s.detections[k]);
      pt.push_back(texts[k]);
    }
    REQUIRE(associate_all(p, pt, {12.5}).records == base.records);
  }
}
