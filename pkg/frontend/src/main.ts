import { ApiClient, ApiError, OfflineError } from "./api.js";
import { DEBOUNCE_MS, LatestWins, debounce } from "./debounce.js";
import { fixed } from "./format.js";
import { renderPage } from "./render.js";
import {
  acceptResponse,
  clearAttack,
  initialState,
  markAttacked,
  setAllocator,
  setBudget,
  setOffline,
  setRoiError,
  setToast,
  toggleNode,
} from "./state.js";
import type { Allocator, ViewState } from "./state.js";
import type { AllocateDto, Tagged } from "./types.js";

const ROI_BUDGETS = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10];

/* Served from /ui; the API lives at the service root on the same origin. */
const api = new ApiClient("");

const app = document.getElementById("app") as HTMLElement;
let state: ViewState = initialState();

function rerender(): void {
  app.innerHTML = renderPage(state);
}

function describe(error: unknown): string {
  if (error instanceof ApiError) {
    return error.violations.length > 0
      ? `${error.message}: ${error.violations.join("; ")}`
      : error.message;
  }
  if (error instanceof OfflineError) return "service unreachable";
  return String(error);
}

const allocation = new LatestWins<{ budget: number; allocator: Allocator }, Tagged<AllocateDto>>(
  (request) => api.allocate(request.budget, request.allocator),
  (_request, tagged) => {
    state = acceptResponse(setToast(state, null), "tree", tagged);
    if (state.needsReload) {
      void bootstrap();
      return;
    }
    rerender();
  },
  (_request, error) => {
    // keep the previous figures on screen; just surface the failure
    state = setToast(state, describe(error));
    if (error instanceof OfflineError) state = setOffline(state, true);
    rerender();
  },
);

const queueAllocation = debounce(() => {
  allocation.submit({ budget: state.budget, allocator: state.allocator });
}, DEBOUNCE_MS);

async function refreshRoi(): Promise<void> {
  try {
    const tagged = await api.roiCurve(ROI_BUDGETS, state.allocator);
    state = setRoiError(acceptResponse(state, "roi", tagged), null);
  } catch (error) {
    if (error instanceof ApiError) {
      state = setRoiError(state, describe(error));
    } else {
      state = setToast(state, describe(error));
      if (error instanceof OfflineError) state = setOffline(state, true);
    }
  }
  if (state.needsReload) {
    void bootstrap();
    return;
  }
  rerender();
}

async function applyAttack(): Promise<void> {
  const chosen = [...state.selected].sort();
  if (chosen.length === 0) return; // nothing selected: the view stays as it is
  try {
    const tagged = await api.attack({
      name: "what-if",
      kind: "targeted",
      steps: chosen.map((id) => ({ op: "remove_node" as const, id })),
    });
    state = acceptResponse(state, "attack", tagged);
    if (!state.needsReload) state = markAttacked(state, new Set(chosen));
  } catch (error) {
    state = setToast(state, describe(error));
    if (error instanceof OfflineError) state = setOffline(state, true);
  }
  if (state.needsReload) {
    void bootstrap();
    return;
  }
  rerender();
}

/**
 * Load every panel from one snapshot. If the version changes mid-flight
 * (another client swapped the network), throw the partial state away and
 * start over, so the screen never mixes two snapshots.
 */
async function bootstrap(): Promise<void> {
  for (let attempt = 0; attempt < 3; attempt += 1) {
    let next: ViewState = {
      ...initialState(),
      budget: state.budget,
      allocator: state.allocator,
    };
    try {
      next = acceptResponse(next, "network", await api.network());
      next = acceptResponse(next, "metrics", await api.metrics());
      next = acceptResponse(next, "risk", await api.risk());
      next = acceptResponse(next, "tree", await api.allocate(next.budget, next.allocator));
      try {
        next = setRoiError(
          acceptResponse(next, "roi", await api.roiCurve(ROI_BUDGETS, next.allocator)),
          null,
        );
      } catch (error) {
        if (!(error instanceof ApiError)) throw error;
        next = setRoiError(next, describe(error));
      }
    } catch (error) {
      if (error instanceof OfflineError) {
        // keep whatever is on screen, greyed, behind the banner
        state = setOffline(state, true);
      } else {
        state = setToast(state, describe(error));
      }
      rerender();
      return;
    }
    if (!next.needsReload) {
      state = next;
      rerender();
      return;
    }
  }
  state = setToast(state, "the snapshot kept changing; please retry");
  rerender();
}

app.addEventListener("click", (event) => {
  const target = event.target as HTMLElement;
  const marker = target.closest("[data-node]");
  if (marker !== null) {
    state = toggleNode(state, marker.getAttribute("data-node") ?? "");
    rerender();
    return;
  }
  switch (target.id) {
    case "apply-attack":
      void applyAttack();
      return;
    case "clear-attack":
      state = clearAttack(state);
      rerender();
      return;
    case "retry":
      void bootstrap();
      return;
  }
});

app.addEventListener("input", (event) => {
  const target = event.target as HTMLInputElement;
  if (target.id === "budget") {
    state = setBudget(state, Number(target.value));
    const output = document.getElementById("budget-value");
    if (output !== null) output.textContent = fixed(state.budget, 1);
    queueAllocation();
  } else if (target.name === "allocator") {
    state = setAllocator(state, target.value as Allocator);
    queueAllocation();
    void refreshRoi();
  }
});

void bootstrap();
