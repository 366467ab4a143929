#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "vincular/enumerate.hpp"
#include "vincular/tables.hpp"

namespace vincular {

nlohmann::json to_json(const CountSequence& seq);
nlohmann::json to_json(const ClassificationReport& report);
nlohmann::json to_json(const FormulaCheck& check);
nlohmann::json to_json(const std::vector<FormulaCheck>& checks);
nlohmann::json to_json(const MultiPanelCheck& check);

std::string render_text(const ClassificationReport& report);
std::string render_text(const std::vector<FormulaCheck>& checks, const std::string& table);
std::string render_text(const MultiPanelCheck& check);

}  // namespace vincular
