import type { ProfileSchema, Vocabulary } from "../src/types";

export const PROFILE: ProfileSchema = {
  id: "https://w3id.org/mobilitydcat-ap",
  version: "1.1.0",
  namespace: "https://w3id.org/mobilitydcat-ap#",
  baseProfile: "http://data.europa.eu/r5r",
  classes: [
    {
      classIri: "http://www.w3.org/ns/dcat#Dataset",
      subClassOf: null,
      properties: [
        {
          propertyIri: "http://purl.org/dc/terms/title",
          obligation: "mandatory",
          minCard: 1,
          maxCard: "*",
          rangeClass: null,
          datatype: null,
          vocabulary: null,
        },
        {
          propertyIri: "http://purl.org/dc/terms/accrualPeriodicity",
          obligation: "mandatory",
          minCard: 1,
          maxCard: 1,
          rangeClass: null,
          datatype: null,
          vocabulary: "https://w3id.org/mobilitydcat-ap/update-frequency",
        },
        {
          propertyIri: "http://purl.org/dc/terms/issued",
          obligation: "optional",
          minCard: 0,
          maxCard: 1,
          rangeClass: null,
          datatype: "http://www.w3.org/2001/XMLSchema#date",
          vocabulary: null,
        },
        {
          propertyIri: "http://www.w3.org/ns/dcat#landingPage",
          obligation: "optional",
          minCard: 0,
          maxCard: "*",
          rangeClass: null,
          datatype: null,
          vocabulary: null,
        },
      ],
    },
    {
      classIri: "https://w3id.org/mobilitydcat-ap#MobilityDataStandard",
      subClassOf: "http://purl.org/dc/terms/Standard",
      properties: [],
    },
  ],
};

export const UPDATE_FREQUENCY: Vocabulary = {
  name: "Update Frequency",
  iri: "https://w3id.org/mobilitydcat-ap/update-frequency",
  title: "Update Frequency",
  version: "1.1.0",
  concepts: [
    {
      iri: "http://publications.europa.eu/resource/authority/frequency/DAILY",
      labels: { en: "Daily", de: "Täglich" },
      definitions: {},
      broader: null,
    },
    {
      iri: "http://publications.europa.eu/resource/authority/frequency/WEEKLY",
      labels: { en: "Weekly" },
      definitions: {},
      broader: null,
    },
  ],
};

export const VOCABULARIES = new Map<string, Vocabulary>([
  [UPDATE_FREQUENCY.iri, UPDATE_FREQUENCY],
]);
