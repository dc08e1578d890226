#pragma once

#include <array>

#include "sdoho/iri.hpp"

namespace sdoho::vocab {

// Core object properties.
Iri relates();
Iri has_measure();
Iri has_time_flag();
Iri has_race();
Iri has_gender();
Iri has_sexual_orientation();
Iri has_employment_status();
Iri has_occupation();
Iri has_education_level();
Iri has_insurance();
Iri has_substance_use_element();
Iri has_sexual_behavior_element();
Iri has_marital_status();
Iri has_living_status();
Iri has_condom_use();
Iri has_diagnosis();
Iri has_incarceration_status();
Iri has_adverse_childhood_experience();
Iri has_behavior_change();
Iri has_personal_loan();

// Data properties.
Iri has_number();
Iri has_number_of_sex_partner();
Iri teo_has_age_value();
Iri teo_has_valid_time();
Iri paco_has_total_amount_min();

// Imported object property for observation windows.
Iri paco_has_observation_period();

// Annotation properties (SKOS).
Iri skos_pref_label();
Iri skos_alt_label();
Iri skos_definition();

// Time-flag individuals.
Iri current();
Iri past();

Iri person_class();

// The nine top-level factor classes, in canonical order.
const std::array<Iri, 9>& top_level_classes();

}  // namespace sdoho::vocab
