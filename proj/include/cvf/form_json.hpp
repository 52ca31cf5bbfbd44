#pragma once

#include "json.hpp"

#include "cvf/class_forms.hpp"

namespace cvf {

// {basis, coefficients} views used in CLI reports.

inline nlohmann::ordered_json form_to_json(const ClassForm& form, ClassBasis basis) {
    nlohmann::ordered_json doc;
    doc["basis"] = basis_name(basis);
    doc["coefficients"] = nlohmann::ordered_json::array();
    for (const auto& c : form.to_basis(basis)) doc["coefficients"].push_back(c.str());
    return doc;
}

inline nlohmann::ordered_json form_to_json(const BorelForm& form) {
    nlohmann::ordered_json doc;
    doc["basis"] = "beta^" + std::to_string(form.weight()) + " tr^m";
    doc["weight"] = form.weight();
    doc["coefficients"] = nlohmann::ordered_json::array();
    for (const auto& c : form.tr_coeffs()) doc["coefficients"].push_back(c.str());
    return doc;
}

} // namespace cvf
