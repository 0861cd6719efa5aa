// @vitest-environment happy-dom
import { beforeEach, describe, expect, it } from "vitest";
import { renderDiagram, renderParameters, renderSolution, renderVerdict } from "../src/panels.js";
import { baseResult, droppedOutputResult, sgiResult, timeoutResult } from "./fixtures.js";

let root: HTMLElement;

beforeEach(() => {
  root = document.createElement("div");
  document.body.replaceChildren(root);
});

describe("renderParameters", () => {
  it("lists each renaming pair in a table", () => {
    renderParameters(root, baseResult());
    const rows = [...root.querySelectorAll("tr")].map((r) => r.textContent);
    expect(rows[0]).toContain("θ");
    expect(rows).toContainEqual(expect.stringContaining("k01"));
    const k01Row = [...root.querySelectorAll("tr")].find((r) => r.textContent?.includes("k01"));
    expect(k01Row?.textContent).toContain("K01");
  });

  it("marks the panel when renaming is unavailable", () => {
    renderParameters(root, baseResult({ renaming: null }));
    expect(root.querySelector(".panel-missing")?.textContent).toContain("unavailable");
  });
});

describe("renderSolution", () => {
  it("shows branch assignments as name = expression lines", () => {
    renderSolution(root, baseResult());
    const text = root.textContent ?? "";
    expect(text).toContain("K01 = k01");
    expect(text).toContain("X10 = (c1*x10)/C3");
    expect(text).toContain("C3 free");
  });

  it("lists the identified combinations", () => {
    renderSolution(root, baseResult());
    const certs = [...root.querySelectorAll(".certificate")].map((n) => n.textContent);
    expect(certs).toContain("C1*X20 - c1*x20");
  });

  it("summarizes dimension and count", () => {
    renderSolution(root, sgiResult());
    expect(root.querySelector(".solution-summary")?.textContent).toContain("dimension 0");
    expect(root.querySelector(".solution-summary")?.textContent).toContain("count 1");
  });

  it("flags a failed symbolic solve but keeps the generic summary", () => {
    renderSolution(root, timeoutResult());
    expect(root.querySelector(".panel-warning")?.textContent).toContain("timeout");
    expect(root.querySelector(".solution-summary")).not.toBeNull();
  });

  it("numbers branches when there are several", () => {
    const result = baseResult();
    result.solution!.branches = [
      { assignments: [["K01", "k01"]], free: [] },
      { assignments: [["K01", "k23"]], free: [] },
    ];
    renderSolution(root, result);
    const heads = [...root.querySelectorAll("h4")].map((n) => n.textContent);
    expect(heads).toContain("branch 1");
    expect(heads).toContain("branch 2");
  });

  it("marks the panel when the solution is missing", () => {
    renderSolution(root, baseResult({ solution: null }));
    expect(root.querySelector(".panel-missing")).not.toBeNull();
  });
});

describe("renderDiagram", () => {
  it("draws one svg group per node and edge", () => {
    renderDiagram(root, baseResult(), "row");
    expect(root.querySelectorAll("svg")).toHaveLength(1);
    expect(root.querySelectorAll(".node")).toHaveLength(7);
    expect(root.querySelectorAll(".edge")).toHaveLength(8);
  });

  it("labels edges with their gain text", () => {
    renderDiagram(root, baseResult(), "row");
    const labels = [...root.querySelectorAll(".edge text")].map((n) => n.textContent);
    expect(labels).toContain("k21");
    expect(labels).toContain("c3");
  });

  it("omits the dropped output when the graph does", () => {
    renderDiagram(root, droppedOutputResult(), "row");
    expect(root.querySelector('[data-node="y3"]')).toBeNull();
    expect(root.querySelector('[data-node="y2"]')).not.toBeNull();
    const labels = [...root.querySelectorAll(".edge text")].map((n) => n.textContent);
    expect(labels).not.toContain("c3");
  });

  it("honors the requested layout algorithm", () => {
    renderDiagram(root, baseResult(), "row");
    const rowX1 = root.querySelector('[data-node="x1"] circle')?.getAttribute("cy");
    renderDiagram(root, baseResult(), "circle");
    const circleX1 = root.querySelector('[data-node="x1"] circle')?.getAttribute("cy");
    expect(rowX1).toBeDefined();
    expect(circleX1).toBeDefined();
    expect(circleX1).not.toBe(rowX1);
  });

  it("marks the panel when there is no graph", () => {
    renderDiagram(root, baseResult({ graph: null }), "row");
    expect(root.querySelector(".panel-missing")).not.toBeNull();
  });
});

describe("renderVerdict", () => {
  it("styles SU and SGI banners differently", () => {
    renderVerdict(root, baseResult());
    const su = root.querySelector(".verdict-banner")!.className;
    renderVerdict(root, sgiResult());
    const sgi = root.querySelector(".verdict-banner")!.className;
    expect(su).toContain("verdict-su");
    expect(sgi).toContain("verdict-sgi");
    expect(su).not.toBe(sgi);
  });

  it("prints the verdict name in the banner", () => {
    renderVerdict(root, droppedOutputResult());
    expect(root.querySelector(".verdict-name")?.textContent).toBe("SLI");
  });

  it("lists per-parameter statuses", () => {
    renderVerdict(root, baseResult());
    const items = [...root.querySelectorAll(".per-parameter li")].map((n) => n.textContent);
    expect(items).toContainEqual(expect.stringContaining("k01"));
    const x10 = items.find((t) => t?.includes("x10"));
    expect(x10).toContain("free");
  });

  it("shows dimension and count facts when present", () => {
    renderVerdict(root, droppedOutputResult());
    expect(root.querySelector(".verdict-facts")?.textContent).toBe("dimension 0, count 2");
  });

  it("falls back to an unknown banner with a missing-details marker", () => {
    renderVerdict(root, timeoutResult());
    expect(root.querySelector(".verdict-banner")!.className).toContain("verdict-unknown");
    expect(root.querySelector(".panel-missing")).not.toBeNull();
  });
});
