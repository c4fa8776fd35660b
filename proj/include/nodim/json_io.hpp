#pragma once

#include <json.hpp>

#include "nodim/caratheodory.hpp"
#include "nodim/helly.hpp"
#include "nodim/quantum.hpp"
#include "nodim/report.hpp"
#include "nodim/sketch.hpp"

namespace nodim {

// Wire formats. Complex matrix entries serialize as [re, im] pairs; plain
// numbers are accepted on input and read as real.

void to_json(nlohmann::json& j, const SpaceSpec& s);
void from_json(const nlohmann::json& j, SpaceSpec& s);

nlohmann::json matrix_to_json(const DenseMatrix& m);
DenseMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json point_to_json(const Point& p);
Point point_from_json(const nlohmann::json& j);

void to_json(nlohmann::json& j, const PointCloud& c);
void from_json(const nlohmann::json& j, PointCloud& c);

void to_json(nlohmann::json& j, const FiniteSignalEnsemble& e);
void from_json(const nlohmann::json& j, FiniteSignalEnsemble& e);

void to_json(nlohmann::json& j, const Sketch& s);
void from_json(const nlohmann::json& j, Sketch& s);

void to_json(nlohmann::json& j, const SlabSystem& s);
void from_json(const nlohmann::json& j, SlabSystem& s);

void to_json(nlohmann::json& j, const MeasurementSystem& s);
void from_json(const nlohmann::json& j, MeasurementSystem& s);

void to_json(nlohmann::json& j, const FeasibilityReport& r);

}  // namespace nodim
