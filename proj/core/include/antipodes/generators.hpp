#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "antipodes/finite_metric.hpp"
#include "antipodes/geometry.hpp"

namespace antipodes {

enum class Family { circle, reuleaux, polygon, sphere_d, origin_plus_cap, two_clusters, random_disk };

Family parse_family(std::string_view name);
std::string_view family_name(Family f) noexcept;
// True for families whose construction depends on epsilon.
bool family_uses_epsilon(Family f) noexcept;

struct GeneratorSpec {
    Family family = Family::circle;
    std::size_t n = 0;
    std::optional<double> epsilon;
    // Polygon side count; 0 defers to polygon_sides_for(eps).
    std::size_t k = 0;
    std::size_t d = 2;
    std::uint64_t seed = 0;
    // Reuleaux vertex clusters hold ceil(vertex_scale * sqrt(eps) * n) points.
    double vertex_scale = 0.5;
};

PointSet generate(const GeneratorSpec& spec);

// n points equally spaced by angle on the circle of radius 1/2.
PointSet gen_circle(std::size_t n);

// n points spread by arclength over the boundary of the regular k-gon with
// circumradius 1/2 (k even, k >= 4, n >= k); every vertex is a sample.
PointSet gen_polygon(std::size_t n, std::size_t k);
double polygon_apothem(std::size_t k);
// Even integer nearest pi / sqrt(2 eps), raised until cos(pi/k) >= 1 - eps.
std::size_t polygon_sides_for(const Epsilon& eps);

// Reuleaux triangle of width 1 over the unit equilateral triangle
// (0,0), (1,0), (1/2, sqrt(3)/2).
PointSet gen_reuleaux(std::size_t n, const Epsilon& eps, double vertex_scale = 0.5);
std::size_t reuleaux_vertex_count(std::size_t n, const Epsilon& eps, double vertex_scale = 0.5);

// n points on the sphere of radius 1/2 in R^d.
PointSet gen_sphere_d(std::size_t n, std::size_t d, std::uint64_t seed = 0);
double sphere_min_separation_bound(std::size_t n, std::size_t d);

// ceil(eps^((d-1)/2) n) points jittered at the origin plus n points on a
// cap of the unit sphere whose angular radius is pi/6 (chord diameter 1).
PointSet gen_origin_plus_cap(std::size_t n, std::size_t d, const Epsilon& eps, std::uint64_t seed = 0);
std::size_t origin_cluster_count(std::size_t n, std::size_t d, const Epsilon& eps);

// Two discs of radius eps/20 whose centers are 1 - eps/2 apart.
PointSet gen_two_clusters(std::size_t n, const Epsilon& eps);

// Uniform sample of the disc of radius 1/2.
PointSet gen_random_disk(std::size_t n, std::uint64_t seed);

// Star metric: d(0, j) = 1, d(i, j) = 2 for distinct leaves i, j >= 1.
FiniteMetric star_metric(std::size_t n);

}  // namespace antipodes
