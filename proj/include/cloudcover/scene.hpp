#pragma once

#include "cloudcover/cloud.hpp"

#include <map>
#include <string>
#include <vector>

namespace cloudcover {

/// Raw cloud definition as written in the scene, kept for exact
/// parse/print round trips.
struct CloudSpec {
    std::string name;
    std::string kind;  // finite | sphere | union | extend | affine_image
    std::vector<std::pair<std::string, std::string>> fields;  // key=value, print order
    std::vector<Point> punctures;

    bool operator==(const CloudSpec&) const = default;
};

struct SceneTask {
    std::string name;
    std::string kind;  // extend | collineate | projective | schmerl | decompose | verify
    std::vector<std::pair<std::string, std::string>> params;

    std::string param(const std::string& key, const std::string& fallback = "") const;
    bool has_param(const std::string& key) const;

    bool operator==(const SceneTask&) const = default;
};

/// A parsed and name-resolved scene: exact-rational wire format, no floats.
struct SceneFile {
    int version = 1;
    std::size_t dimension = 2;
    std::vector<std::pair<std::string, Point>> points;
    std::vector<std::pair<std::string, AffineMap>> maps;
    std::vector<CloudSpec> cloud_specs;
    std::vector<SceneTask> tasks;

    // Resolved clouds, by name (punctures applied). Not part of equality.
    std::map<std::string, Cloud> clouds;

    const Point& point(const std::string& name) const;
    const Cloud& cloud(const std::string& name) const;

    bool operator==(const SceneFile& other) const {
        return version == other.version && dimension == other.dimension &&
               points == other.points && maps == other.maps && cloud_specs == other.cloud_specs &&
               tasks == other.tasks;
    }
};

/// Parses the line-oriented scene text. Errors carry "line L, col C"
/// positions in their message.
SceneFile parse_scene(const std::string& text);

std::string print_scene(const SceneFile& scene);

}  // namespace cloudcover
