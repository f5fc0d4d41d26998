/** Thin typed client for the repository service; base URL is the only config. */

import type {
  ApiErrorBody,
  ComparisonDoc,
  ModelDoc,
  ModelSummaryDoc,
  StatsDoc,
  TaxonomyDoc,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    public readonly body: ApiErrorBody,
  ) {
    super(body.message);
  }
}

async function readError(response: Response): Promise<ApiError> {
  let body: ApiErrorBody;
  try {
    body = (await response.json()) as ApiErrorBody;
  } catch {
    body = { code: "HTTP_" + response.status, message: response.statusText };
  }
  return new ApiError(response.status, body);
}

export class ApiClient {
  constructor(private readonly baseUrl: string) {}

  private url(path: string): string {
    return this.baseUrl.replace(/\/$/, "") + path;
  }

  private async getJson<T>(path: string): Promise<T> {
    const response = await fetch(this.url(path));
    if (!response.ok) throw await readError(response);
    return (await response.json()) as T;
  }

  fetchTaxonomy(): Promise<TaxonomyDoc> {
    return this.getJson<TaxonomyDoc>("/api/v1/taxonomy");
  }

  listModels(): Promise<{ count: number; models: ModelSummaryDoc[] }> {
    return this.getJson("/api/v1/attacks");
  }

  fetchModel(id: string): Promise<ModelDoc> {
    return this.getJson<ModelDoc>(`/api/v1/attacks/${encodeURIComponent(id)}`);
  }

  /** PUT with If-Unmodified-Since semantics via the expected_modified field. */
  async putModel(doc: ModelDoc, expectedModified: string | null): Promise<ModelDoc> {
    const body: Record<string, unknown> = { ...doc };
    if (expectedModified !== null) body["expected_modified"] = expectedModified;
    const response = await fetch(this.url(`/api/v1/attacks/${encodeURIComponent(doc.id)}`), {
      method: "PUT",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
    if (!response.ok) throw await readError(response);
    return (await response.json()) as ModelDoc;
  }

  async compare(ids: string[], palette?: string[]): Promise<ComparisonDoc> {
    const response = await fetch(this.url("/api/v1/compare"), {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(palette ? { ids, palette } : { ids }),
    });
    if (!response.ok) throw await readError(response);
    return (await response.json()) as ComparisonDoc;
  }

  fetchStats(): Promise<StatsDoc> {
    return this.getJson<StatsDoc>("/api/v1/stats");
  }
}
