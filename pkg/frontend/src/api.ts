/** Thin typed client for the portal service. All RDF work stays server-side. */

import type {
  ProfileSchema,
  RdfFormat,
  SerializeNode,
  ValidationReportJson,
  Vocabulary,
  VocabularySummary,
} from "./types";

export class ServiceUnavailable extends Error {}

async function getJson<T>(url: string, signal?: AbortSignal): Promise<T> {
  let response: Response;
  try {
    response = await fetch(url, { signal });
  } catch (err) {
    if (err instanceof DOMException && err.name === "AbortError") throw err;
    throw new ServiceUnavailable(`cannot reach ${url}: ${String(err)}`);
  }
  if (!response.ok) {
    throw new ServiceUnavailable(`${url} answered ${response.status}`);
  }
  return (await response.json()) as T;
}

export class ApiClient {
  constructor(public readonly base: string) {}

  private url(path: string): string {
    return this.base.replace(/\/$/, "") + path;
  }

  async profile(): Promise<ProfileSchema> {
    return getJson<ProfileSchema>(this.url("/api/profile"));
  }

  async vocabularies(): Promise<VocabularySummary[]> {
    return getJson<VocabularySummary[]>(this.url("/api/vocabularies"));
  }

  async vocabulary(slug: string): Promise<Vocabulary> {
    return getJson<Vocabulary>(this.url(`/api/vocabularies/${slug}`));
  }

  /** Every vocabulary keyed by scheme IRI, for concept pickers. */
  async vocabulariesByIri(): Promise<Map<string, Vocabulary>> {
    const summaries = await this.vocabularies();
    const entries = await Promise.all(
      summaries.map(async (s) => [s.iri, await this.vocabulary(s.slug)] as const),
    );
    return new Map(entries);
  }

  async serialize(
    nodes: SerializeNode[],
    format: RdfFormat,
    signal?: AbortSignal,
  ): Promise<string> {
    const response = await fetch(this.url(`/api/serialize?format=${format}`), {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ nodes }),
      signal,
    });
    if (!response.ok) {
      throw new Error(`serialize failed: ${response.status} ${await response.text()}`);
    }
    return response.text();
  }

  async validateTurtle(
    turtle: string,
    signal?: AbortSignal,
  ): Promise<ValidationReportJson> {
    const response = await fetch(this.url("/api/validate"), {
      method: "POST",
      headers: { "Content-Type": "text/turtle", Accept: "application/json" },
      body: turtle,
      signal,
    });
    if (!response.ok && response.status !== 200) {
      throw new Error(`validate failed: ${response.status} ${await response.text()}`);
    }
    return (await response.json()) as ValidationReportJson;
  }

  /** Serialize the draft server-side, then check it; one round trip per call. */
  async validateDraft(
    nodes: SerializeNode[],
    signal?: AbortSignal,
  ): Promise<ValidationReportJson> {
    const turtle = await this.serialize(nodes, "turtle", signal);
    return this.validateTurtle(turtle, signal);
  }
}
