import { BoardView } from "./board.js";
import { GateboardClient } from "./client.js";
import { confirmDialog } from "./dialog.js";
import { zoomAt } from "./geometry.js";
import { GestureRecognizer } from "./gestures.js";
import type { Command, GateName, InputName, OutputName, StateDocument } from "./protocol.js";

export interface SimulationHandlers {
    onLeave: () => void;
    onExit: () => void;
}

const GATE_PALETTE: GateName[] = ["and", "or", "not", "nand", "nor", "xor", "xnor", "buf"];
const INPUT_PALETTE: InputName[] = ["switch", "const0", "const1"];
const OUTPUT_PALETTE: OutputName[] = ["lamp", "led"];

const VIEWPORT_PUSH_DELAY_MS = 250;

// The editing screen. All circuit behaviour lives on the server; this
// class translates gestures and button presses into protocol commands
// and repaints from the snapshots that come back.
export class SimulationScreen {
    public readonly root: HTMLElement;
    public readonly board: BoardView;
    public readonly client: GateboardClient;
    public readonly gestures: GestureRecognizer;

    private readonly handlers: SimulationHandlers;
    private readonly deleteButton: HTMLButtonElement;
    private readonly statusBar: HTMLElement;
    private notice: string | null = null;

    // Local viewport edits that have not been acknowledged yet. While
    // this flag is up, snapshot viewports are ignored so an in-flight
    // pan does not snap back.
    private viewportDirty = false;
    private viewportPushTimer: ReturnType<typeof setTimeout> | null = null;

    private drag:
        | { mode: "element"; element: number; grab: { dx: number; dy: number } }
        | { mode: "pan"; panStart: { dx: number; dy: number } }
        | null = null;

    private readonly onWindowResize = () => this.board.resize();

    public constructor(handlers: SimulationHandlers, apiBase = "") {
        this.handlers = handlers;
        this.client = new GateboardClient(apiBase);

        this.root = document.createElement("div");
        this.root.className = "screen simulation-screen";

        const topBar = document.createElement("div");
        topBar.className = "top-bar";
        const menuButton = toolButton("Menu", "tool-menu", () => void this.confirmLeave());
        const cleanButton = toolButton("Clean", "tool-clean", () => this.issue({ type: "clean" }));
        const newButton = toolButton("New Circuit", "tool-new", () =>
            this.issue({ type: "new_circuit" }),
        );
        this.deleteButton = toolButton("Delete", "tool-delete", () =>
            this.issue({ type: "toggle_delete_mode" }),
        );
        const exitButton = toolButton("Exit", "tool-exit", () => void this.confirmExit());
        topBar.append(menuButton, newButton, cleanButton, this.deleteButton, exitButton);

        const body = document.createElement("div");
        body.className = "sim-body";

        const palette = document.createElement("div");
        palette.className = "palette";
        palette.append(paletteGroup("Inputs", INPUT_PALETTE, (name) => this.addElement("input", name)));
        palette.append(paletteGroup("Gates", GATE_PALETTE, (name) => this.addElement("gate", name)));
        palette.append(paletteGroup("Outputs", OUTPUT_PALETTE, (name) => this.addElement("output", name)));

        const stage = document.createElement("div");
        stage.className = "stage";
        const canvas = document.createElement("canvas");
        canvas.className = "board-canvas";
        stage.append(canvas);

        body.append(palette, stage);

        this.statusBar = document.createElement("div");
        this.statusBar.className = "status-bar";
        this.statusBar.textContent = "connecting...";

        this.root.append(topBar, body, this.statusBar);

        this.board = new BoardView(canvas);
        this.gestures = new GestureRecognizer({
            onTap: (x, y) => this.tapAt(x, y),
            onDoubleTap: (x, y) => this.doubleTapAt(x, y),
            onDragStart: (x, y) => this.dragStart(x, y),
            onDragMove: (dx, dy, x, y) => this.dragMove(dx, dy, x, y),
            onDragEnd: (x, y) => this.dragEnd(x, y),
            onPinch: (cx, cy, factor, dx, dy) => this.pinch(cx, cy, factor, dx, dy),
            onPinchEnd: () => this.scheduleViewportPush(0),
        });
        this.bindCanvasEvents(canvas);
    }

    public async enter(): Promise<void> {
        window.addEventListener("resize", this.onWindowResize);
        this.board.resize();
        const info = await this.client.open();
        this.applyState(info.state);
    }

    public leave(): void {
        window.removeEventListener("resize", this.onWindowResize);
        if (this.viewportPushTimer !== null) {
            clearTimeout(this.viewportPushTimer);
            this.viewportPushTimer = null;
        }
        void this.client.close().catch(() => undefined);
    }

    // Resolves once every queued command has been answered. Used by the
    // tests; harmless elsewhere.
    public async idle(): Promise<void> {
        if (this.viewportPushTimer !== null) {
            clearTimeout(this.viewportPushTimer);
            this.viewportPushTimer = null;
            this.pushViewport();
        }
        await this.client.settled();
    }

    // --- command plumbing ---------------------------------------------

    private issue(command: Command): void {
        void this.client
            .send(command)
            .then((result) => {
                if (result.event.kind === "rejected") {
                    this.notice = `rejected: ${result.event.reason}`;
                } else {
                    this.notice = null;
                }
                const resetView = command.type === "reset_viewport" || command.type === "new_circuit";
                if (resetView) {
                    this.viewportDirty = false;
                }
                this.applyState(result.state);
            })
            .catch((err: unknown) => {
                this.notice = err instanceof Error ? err.message : String(err);
                this.refreshStatus();
            });
    }

    private applyState(state: StateDocument): void {
        this.board.setState(state);
        this.board.clearDragGhost();
        if (!this.viewportDirty) {
            this.board.setViewport(state.viewport);
        }
        this.deleteButton.textContent = state.mode === "delete_active" ? "DELETE ACTIVE" : "Delete";
        this.deleteButton.classList.toggle("armed", state.mode === "delete_active");
        this.refreshStatus();
    }

    private refreshStatus(): void {
        if (this.notice !== null) {
            this.statusBar.textContent = this.notice;
            return;
        }
        const diagnostics = this.board.getState().diagnostics;
        if (diagnostics.length === 0) {
            this.statusBar.textContent = "ok";
        } else {
            const first = diagnostics[0]!.message;
            const more = diagnostics.length > 1 ? ` (+${diagnostics.length - 1} more)` : "";
            this.statusBar.textContent = first + more;
        }
    }

    private addElement(kind: "gate" | "input" | "output", name: string): void {
        const position = this.board.centerWorld();
        if (kind === "gate") {
            this.issue({ type: "add_gate", gate: name as GateName, position });
        } else if (kind === "input") {
            this.issue({ type: "add_input", input: name as InputName, position });
        } else {
            this.issue({ type: "add_output", output: name as OutputName, position });
        }
    }

    // --- gestures ------------------------------------------------------

    private tapAt(x: number, y: number): void {
        const target = this.board.pick(x, y);
        if (target === null) {
            return;
        }
        if (target.type === "pin") {
            this.issue({ type: "tap_pin", element: target.element, pin: target.pin });
        } else {
            this.issue({ type: "tap_element", element: target.element });
        }
    }

    private doubleTapAt(x: number, y: number): void {
        // Only empty canvas resets the view; a double tap on an element
        // is just two taps and has already been handled as such.
        if (this.board.pick(x, y) === null) {
            this.viewportDirty = false;
            this.issue({ type: "reset_viewport" });
        }
    }

    private dragStart(x: number, y: number): void {
        const target = this.board.pick(x, y);
        if (target !== null && target.type === "element") {
            const el = this.board.getState().elements.find((e) => e.id === target.element);
            if (el !== undefined) {
                const w = this.board.toWorld(x, y);
                this.drag = {
                    mode: "element",
                    element: target.element,
                    grab: { dx: w.x - el.position.x, dy: w.y - el.position.y },
                };
                return;
            }
        }
        this.drag = { mode: "pan", panStart: { ...this.board.getViewport().pan } };
    }

    private dragMove(dx: number, dy: number, x: number, y: number): void {
        if (this.drag === null) {
            return;
        }
        if (this.drag.mode === "element") {
            const w = this.board.toWorld(x, y);
            this.board.setDragGhost(this.drag.element, {
                x: w.x - this.drag.grab.dx,
                y: w.y - this.drag.grab.dy,
            });
        } else {
            const view = this.board.getViewport();
            view.pan.dx = this.drag.panStart.dx + dx;
            view.pan.dy = this.drag.panStart.dy + dy;
            this.viewportDirty = true;
            this.board.setViewport(view);
        }
    }

    private dragEnd(x: number, y: number): void {
        const drag = this.drag;
        this.drag = null;
        if (drag === null) {
            return;
        }
        if (drag.mode === "element") {
            const w = this.board.toWorld(x, y);
            this.issue({
                type: "move_element",
                element: drag.element,
                position: { x: w.x - drag.grab.dx, y: w.y - drag.grab.dy },
            });
        } else {
            this.scheduleViewportPush(0);
        }
    }

    private pinch(cx: number, cy: number, factor: number, dx: number, dy: number): void {
        let view = zoomAt(this.board.getViewport(), { x: cx, y: cy }, factor);
        view = { zoom: view.zoom, pan: { dx: view.pan.dx + dx, dy: view.pan.dy + dy } };
        this.viewportDirty = true;
        this.board.setViewport(view);
    }

    public wheel(x: number, y: number, deltaY: number): void {
        const factor = Math.pow(1.0015, -deltaY);
        this.viewportDirty = true;
        this.board.setViewport(zoomAt(this.board.getViewport(), { x, y }, factor));
        this.scheduleViewportPush(VIEWPORT_PUSH_DELAY_MS);
    }

    private scheduleViewportPush(delayMs: number): void {
        if (this.viewportPushTimer !== null) {
            clearTimeout(this.viewportPushTimer);
        }
        this.viewportPushTimer = setTimeout(() => {
            this.viewportPushTimer = null;
            this.pushViewport();
        }, delayMs);
    }

    private pushViewport(): void {
        if (!this.viewportDirty) {
            return;
        }
        const view = this.board.getViewport();
        this.viewportDirty = false;
        this.issue({ type: "set_viewport", zoom: view.zoom, pan: view.pan });
    }

    // --- leaving -------------------------------------------------------

    private async confirmLeave(): Promise<void> {
        const yes = await confirmDialog(this.root, "Go back to the main menu? The current circuit is discarded.");
        if (yes) {
            this.handlers.onLeave();
        }
    }

    private async confirmExit(): Promise<void> {
        const yes = await confirmDialog(this.root, "Exit gateboard?");
        if (yes) {
            this.handlers.onExit();
        }
    }

    // --- DOM plumbing ----------------------------------------------------

    private bindCanvasEvents(canvas: HTMLCanvasElement): void {
        const local = (event: PointerEvent): { x: number; y: number } => {
            const rect = canvas.getBoundingClientRect();
            return { x: event.clientX - rect.left, y: event.clientY - rect.top };
        };
        canvas.addEventListener("pointerdown", (event) => {
            event.preventDefault();
            if (typeof canvas.setPointerCapture === "function") {
                try {
                    canvas.setPointerCapture(event.pointerId);
                } catch {
                    // Capture is best-effort; synthetic events may lack it.
                }
            }
            const p = local(event);
            this.gestures.pointerDown(event.pointerId, p.x, p.y);
        });
        canvas.addEventListener("pointermove", (event) => {
            const p = local(event);
            this.gestures.pointerMove(event.pointerId, p.x, p.y);
        });
        canvas.addEventListener("pointerup", (event) => {
            const p = local(event);
            this.gestures.pointerUp(event.pointerId, p.x, p.y, event.timeStamp || Date.now());
        });
        canvas.addEventListener("pointercancel", (event) => {
            this.gestures.pointerCancel(event.pointerId);
        });
        canvas.addEventListener(
            "wheel",
            (event) => {
                event.preventDefault();
                const rect = canvas.getBoundingClientRect();
                this.wheel(event.clientX - rect.left, event.clientY - rect.top, event.deltaY);
            },
            { passive: false },
        );
    }
}

function toolButton(label: string, cls: string, onClick: () => void): HTMLButtonElement {
    const button = document.createElement("button");
    button.textContent = label;
    button.className = `tool-button ${cls}`;
    button.addEventListener("click", onClick);
    return button;
}

function paletteGroup(
    title: string,
    names: readonly string[],
    onPick: (name: string) => void,
): HTMLElement {
    const group = document.createElement("div");
    group.className = "palette-group";
    const heading = document.createElement("h3");
    heading.textContent = title;
    group.append(heading);
    for (const name of names) {
        const button = document.createElement("button");
        button.textContent = name;
        button.className = "palette-button";
        button.dataset["add"] = name;
        button.addEventListener("click", () => onPick(name));
        group.append(button);
    }
    return group;
}
