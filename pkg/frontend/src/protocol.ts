// Wire types for the gateboard session protocol.
//
// These mirror the JSON the service sends and accepts. The front end never
// computes logic levels itself: every response carries a complete
// StateDocument and the view simply replaces its world with it.

export type LevelSymbol = "0" | "1" | "x";
export type IndicatorState = "on" | "off" | "undefined";
export type EditorMode = "normal" | "delete_active";

export type GateName =
    | "and"
    | "or"
    | "not"
    | "nand"
    | "nor"
    | "xor"
    | "xnor"
    | "buf";

export type InputName = "const0" | "const1" | "switch";
export type OutputName = "lamp" | "led";

export interface Position {
    x: number;
    y: number;
}

export interface Pan {
    dx: number;
    dy: number;
}

export interface Viewport {
    zoom: number;
    pan: Pan;
}

export type ElementParams =
    | { input: InputName; on: boolean }
    | { gate: GateName }
    | { output: OutputName };

export interface ElementDoc {
    id: number;
    kind: "input" | "gate" | "output";
    params: ElementParams;
    position: Position;
    name: string | null;
}

export interface PinRef {
    element: number;
    pin: string;
}

export interface ConnectionDoc {
    from: PinRef;
    to: PinRef;
}

export interface DiagnosticDoc {
    kind: "floating_input" | "combinational_cycle";
    elements: number[];
    pins: string[];
    message: string;
}

export interface StateDocument {
    elements: ElementDoc[];
    connections: ConnectionDoc[];
    levels: Record<string, LevelSymbol>;
    indicators: Record<string, IndicatorState>;
    diagnostics: DiagnosticDoc[];
    mode: EditorMode;
    pending_pin: string | null;
    viewport: Viewport;
}

// Commands, tagged by `type`.

export type Command =
    | { type: "add_gate"; gate: GateName; position?: Position }
    | { type: "add_input"; input: InputName; position?: Position }
    | { type: "add_output"; output: OutputName; position?: Position }
    | { type: "tap_pin"; element: number; pin: string }
    | { type: "tap_element"; element: number }
    | { type: "move_element"; element: number; position: Position }
    | { type: "toggle_delete_mode" }
    | { type: "clean" }
    | { type: "set_viewport"; zoom: number; pan: Pan }
    | { type: "reset_viewport" }
    | { type: "new_circuit" };

// Events, tagged by `kind`. Exactly one per applied command.

export type Event =
    | { kind: "element_added"; element: number }
    | { kind: "element_deleted"; element: number }
    | { kind: "connection_made"; from: PinRef; to: PinRef }
    | { kind: "switch_toggled"; element: number; level: LevelSymbol }
    | { kind: "mode_changed"; mode: EditorMode }
    | { kind: "cleaned" }
    | { kind: "viewport_changed"; viewport: Viewport }
    | { kind: "state_refreshed" }
    | { kind: "rejected"; reason: string };

export interface SessionInfo {
    session: string;
    seq: number;
    state: StateDocument;
}

export interface CommandResult {
    seq: number;
    event: Event;
    state: StateDocument;
}

export interface LoadResult {
    event: Event;
    state: StateDocument;
}

export interface ErrorEnvelope {
    kind: string;
    message: string;
    expected?: number;
    line?: number;
    column?: number;
}

export interface TableDocument {
    inputs: { element: number; name: string }[];
    outputs: { element: number; name: string }[];
    rows: { inputs: number[]; outputs: LevelSymbol[] }[];
}

export function pinKey(ref: PinRef): string {
    return `${ref.element}.${ref.pin}`;
}
