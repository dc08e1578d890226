#include "sdoho/vocab.hpp"

namespace sdoho::vocab {

namespace {
Iri core(const char* local) { return Iri::make("", local); }
}  // namespace

Iri relates() { return core("relates"); }
Iri has_measure() { return core("has_measure"); }
Iri has_time_flag() { return core("has_time_flag"); }
Iri has_race() { return core("has_race"); }
Iri has_gender() { return core("has_gender"); }
Iri has_sexual_orientation() { return core("has_sexual_orientation"); }
Iri has_employment_status() { return core("has_employment_status"); }
Iri has_occupation() { return core("has_occupation"); }
Iri has_education_level() { return core("has_education_level"); }
Iri has_insurance() { return core("has_insurance"); }
Iri has_substance_use_element() { return core("has_substance_use_element"); }
Iri has_sexual_behavior_element() { return core("has_sexual_behavior_element"); }
Iri has_marital_status() { return core("has_marital_status"); }
Iri has_living_status() { return core("has_living_status"); }
Iri has_condom_use() { return core("has_condom_use"); }
Iri has_diagnosis() { return core("has_diagnosis"); }
Iri has_incarceration_status() { return core("has_incarceration_status"); }
Iri has_adverse_childhood_experience() { return core("has_adverse_childhood_experience"); }
Iri has_behavior_change() { return core("has_behavior_change"); }
Iri has_personal_loan() { return core("has_personal_loan"); }

Iri has_number() { return core("has_number"); }
Iri has_number_of_sex_partner() { return core("has_number_of_sex_partner"); }
Iri teo_has_age_value() { return Iri::make("teo", "hasAgeValue"); }
Iri teo_has_valid_time() { return Iri::make("teo", "hasValidTime"); }
Iri paco_has_total_amount_min() { return Iri::make("paco", "hasTotalAmountMin"); }
Iri paco_has_observation_period() { return Iri::make("paco", "hasObservationPeriod"); }

Iri skos_pref_label() { return Iri::make("skos", "prefLabel"); }
Iri skos_alt_label() { return Iri::make("skos", "altLabel"); }
Iri skos_definition() { return Iri::make("skos", "definition"); }

Iri current() { return core("current"); }
Iri past() { return core("past"); }

Iri person_class() { return core("Person"); }

const std::array<Iri, 9>& top_level_classes() {
  static const std::array<Iri, 9> roots = {
      core("Element_Relevant_to_Behavior_and_Lifestyle"),
      core("Demographic"),
      core("Element_Relevant_to_Education"),
      core("Element_Relevant_to_Social_and_Community_Context"),
      core("Element_Relevant_to_Health_Care"),
      core("Element_Relevant_to_Economic_Stability"),
      core("Element_Relevant_to_Neighborhood"),
      core("Element_Relevant_to_Food"),
      core("Measure_and_Index_and_Score"),
  };
  return roots;
}

}  // namespace sdoho::vocab
