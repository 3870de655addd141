/** Bootstrap: fetch the active profile and vocabularies, render the form. */

import { ApiClient, ServiceUnavailable } from "./api";
import { buildFormModel } from "./model";
import { GeneratorView } from "./view";

export async function loadFormSchema(
  serviceBase: string,
  root: HTMLElement,
): Promise<GeneratorView> {
  const api = new ApiClient(serviceBase);
  const [profile, vocabularies] = await Promise.all([
    api.profile(),
    api.vocabulariesByIri(),
  ]);
  const view = new GeneratorView(root, api, buildFormModel(profile, vocabularies));
  view.render();
  return view;
}

function serviceBaseFromLocation(): string {
  const params = new URLSearchParams(window.location.search);
  return params.get("service") ?? window.location.origin;
}

export async function bootstrap(): Promise<void> {
  const root = document.getElementById("generator");
  if (!root) return;
  try {
    await loadFormSchema(serviceBaseFromLocation(), root);
  } catch (err) {
    const banner = document.createElement("div");
    banner.className = "banner error";
    banner.id = "service-error";
    banner.textContent =
      err instanceof ServiceUnavailable
        ? `Portal service unreachable: ${err.message}`
        : `Could not load the form schema: ${String(err)}`;
    root.innerHTML = "";
    root.appendChild(banner);
  }
}

if (typeof document !== "undefined" && document.getElementById("generator")) {
  void bootstrap();
}
