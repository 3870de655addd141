/** Payload shapes of the portal-service API the Generator consumes. */

export interface PropertySchema {
  propertyIri: string;
  obligation: "mandatory" | "recommended" | "optional";
  minCard: number;
  maxCard: number | "*";
  rangeClass: string | null;
  datatype: string | null;
  vocabulary: string | null;
}

export interface ClassSchema {
  classIri: string;
  subClassOf: string | null;
  properties: PropertySchema[];
}

export interface ProfileSchema {
  id: string;
  version: string;
  namespace: string;
  baseProfile: string | null;
  classes: ClassSchema[];
}

export interface VocabularySummary {
  name: string;
  slug: string;
  iri: string;
  title: string;
  version: string;
  conceptCount: number;
}

export interface VocabularyConcept {
  iri: string;
  labels: Record<string, string>;
  definitions: Record<string, string>;
  broader: string | null;
}

export interface Vocabulary {
  name: string;
  iri: string;
  title: string;
  version: string;
  concepts: VocabularyConcept[];
}

export interface ValidationResultJson {
  focusNode: string;
  path: string | null;
  sourceShape: string;
  severity: "Violation" | "Warning" | "Info";
  message: string;
  value: string | null;
}

export interface ValidationReportJson {
  conforms: boolean;
  results: ValidationResultJson[];
}

/** One value as sent to POST /api/serialize. */
export type SerializeValue =
  | { iri: string }
  | { value: string; language?: string; datatype?: string };

export interface SerializeNode {
  id: string;
  type: string;
  properties: Record<string, SerializeValue[]>;
}

export type RdfFormat = "turtle" | "ntriples" | "jsonld";

export const FORMAT_EXTENSIONS: Record<RdfFormat, string> = {
  turtle: ".ttl",
  ntriples: ".nt",
  jsonld: ".jsonld",
};
