/** Form model derived from the active profile, and the draft being edited.
 *
 * The form mirrors the profile exactly: one section per class that carries
 * properties, one control per property. Input kinds are inferred from the
 * property's bindings: a vocabulary makes a concept picker, a datatype a
 * typed text field, a range class (or link-ish IRI) an IRI field, anything
 * else language-tagged text.
 */

import type {
  ClassSchema,
  ProfileSchema,
  PropertySchema,
  SerializeNode,
  SerializeValue,
  Vocabulary,
} from "./types";

export type InputKind = "text" | "iri" | "langtext" | "concept";

export interface FieldModel {
  property: PropertySchema;
  kind: InputKind;
  label: string;
  mandatory: boolean;
  repeatable: boolean;
  /** concept IRIs offered by the picker; only scheme members, nothing else */
  options: { iri: string; label: string }[];
}

export interface SectionModel {
  classIri: string;
  label: string;
  defaultNodeId: string;
  fields: FieldModel[];
}

export interface FormModel {
  profileId: string;
  version: string;
  sections: SectionModel[];
}

export function localName(iri: string): string {
  const cut = Math.max(iri.lastIndexOf("#"), iri.lastIndexOf("/"));
  return cut >= 0 ? iri.slice(cut + 1) : iri;
}

export function humanLabel(iri: string): string {
  const local = localName(iri);
  const spaced = local
    .replace(/([a-z0-9])([A-Z])/g, "$1 $2")
    .replace(/[-_]/g, " ")
    .toLowerCase();
  return spaced.charAt(0).toUpperCase() + spaced.slice(1);
}

const LINK_PROPERTY_HINTS = [/URL$/i, /#dataset$/, /#distribution$/, /page$/i];

export function inferKind(property: PropertySchema): InputKind {
  if (property.vocabulary) return "concept";
  if (property.rangeClass) return "iri";
  if (property.datatype) return "text";
  if (LINK_PROPERTY_HINTS.some((re) => re.test(property.propertyIri))) return "iri";
  return "langtext";
}

function conceptOptions(
  property: PropertySchema,
  vocabularies: Map<string, Vocabulary>,
): { iri: string; label: string }[] {
  if (!property.vocabulary) return [];
  const vocabulary = vocabularies.get(property.vocabulary);
  if (!vocabulary) return [];
  return vocabulary.concepts.map((c) => ({
    iri: c.iri,
    label: c.labels["en"] ?? Object.values(c.labels)[0] ?? c.iri,
  }));
}

export function buildFormModel(
  profile: ProfileSchema,
  vocabularies: Map<string, Vocabulary>,
): FormModel {
  const sections = profile.classes
    .filter((cls: ClassSchema) => cls.properties.length > 0)
    .map((cls) => ({
      classIri: cls.classIri,
      label: humanLabel(cls.classIri),
      defaultNodeId: `https://example.org/record/${localName(cls.classIri).toLowerCase()}`,
      fields: cls.properties.map((property) => ({
        property,
        kind: inferKind(property),
        label: humanLabel(property.propertyIri),
        mandatory: property.obligation === "mandatory",
        repeatable: property.maxCard === "*" || property.maxCard > 1,
        options: conceptOptions(property, vocabularies),
      })),
    }));
  return { profileId: profile.id, version: profile.version, sections };
}

/** One entered value; language only meaningful for langtext fields. */
export interface DraftValue {
  text: string;
  language?: string;
}

export class DraftRecord {
  /** (classIri, propertyIri) -> entered values, in form order */
  private values = new Map<string, DraftValue[]>();
  private nodeIds = new Map<string, string>();

  constructor(public readonly form: FormModel) {
    for (const section of form.sections) {
      this.nodeIds.set(section.classIri, section.defaultNodeId);
    }
  }

  private key(classIri: string, propertyIri: string): string {
    return `${classIri}\n${propertyIri}`;
  }

  nodeId(classIri: string): string {
    return this.nodeIds.get(classIri) ?? "";
  }

  setNodeId(classIri: string, id: string): void {
    this.nodeIds.set(classIri, id);
  }

  valuesFor(classIri: string, propertyIri: string): DraftValue[] {
    return this.values.get(this.key(classIri, propertyIri)) ?? [];
  }

  setValues(classIri: string, propertyIri: string, values: DraftValue[]): void {
    const kept = values.filter((v) => v.text.trim() !== "");
    if (kept.length === 0) {
      this.values.delete(this.key(classIri, propertyIri));
    } else {
      this.values.set(this.key(classIri, propertyIri), kept);
    }
  }

  /** Repeat counts must stay within [minCard, maxCard] before submission. */
  cardinalityProblems(): string[] {
    const problems: string[] = [];
    for (const section of this.form.sections) {
      if (!this.sectionHasContent(section.classIri)) continue;
      for (const field of section.fields) {
        const count = this.valuesFor(section.classIri, field.property.propertyIri).length;
        const min = field.property.minCard;
        const max = field.property.maxCard;
        if (count < min) {
          problems.push(`${field.label}: needs at least ${min} value(s), has ${count}`);
        }
        if (max !== "*" && count > max) {
          problems.push(`${field.label}: allows at most ${max} value(s), has ${count}`);
        }
      }
    }
    return problems;
  }

  sectionHasContent(classIri: string): boolean {
    for (const section of this.form.sections) {
      if (section.classIri !== classIri) continue;
      for (const field of section.fields) {
        if (this.valuesFor(classIri, field.property.propertyIri).length > 0) {
          return true;
        }
      }
    }
    return false;
  }

  isEmpty(): boolean {
    return this.values.size === 0;
  }

  /** Sections with content become typed nodes in the serialize payload. */
  toNodes(): SerializeNode[] {
    const nodes: SerializeNode[] = [];
    for (const section of this.form.sections) {
      if (!this.sectionHasContent(section.classIri)) continue;
      const properties: Record<string, SerializeValue[]> = {};
      for (const field of section.fields) {
        const entered = this.valuesFor(section.classIri, field.property.propertyIri);
        if (entered.length === 0) continue;
        properties[field.property.propertyIri] = entered.map((v) =>
          draftValueToSerialize(field, v),
        );
      }
      nodes.push({
        id: this.nodeId(section.classIri),
        type: section.classIri,
        properties,
      });
    }
    return nodes;
  }
}

function draftValueToSerialize(field: FieldModel, value: DraftValue): SerializeValue {
  switch (field.kind) {
    case "concept":
    case "iri":
      return { iri: value.text.trim() };
    case "text":
      return field.property.datatype
        ? { value: value.text, datatype: field.property.datatype }
        : { value: value.text };
    case "langtext":
      return value.language
        ? { value: value.text, language: value.language }
        : { value: value.text };
  }
}
