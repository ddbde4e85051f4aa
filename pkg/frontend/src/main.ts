import { PcmApiClient } from './api.js';
import { DEBOUNCE_MS, GridController } from './controller.js';
import {
  ACCEPTABLE_KII,
  MAX_SIZE,
  MIN_SIZE,
  cellHeat,
  cellInvalid,
  matrixFromState,
  reciprocalText,
  repairStatus,
  upperOffset,
  worstTriadCells,
} from './state.js';
import type { MatrixDocument, RepairCandidate } from './types.js';

const STORAGE_KEY = 'pcmkit.matrix';

const SAMPLE_ENTRIES = [
  [1, 2, 2],
  [0.5, 1, 2],
  [0.5, 0.5, 1],
];

function mustFind<T extends Element>(id: string, kind: new () => T): T {
  const el = document.getElementById(id);
  if (!(el instanceof kind)) {
    throw new Error(`missing #${id}`);
  }
  return el;
}

const gridEl = mustFind('grid', HTMLTableElement);
const bannerEl = mustFind('banner', HTMLElement);
const indicatorsEl = mustFind('indicators', HTMLDListElement);
const whatifEl = mustFind('whatif', HTMLElement);
const whatifListEl = mustFind('whatif-list', HTMLUListElement);
const sizeEl = mustFind('size', HTMLSelectElement);
const undoEl = mustFind('undo', HTMLButtonElement);
const redoEl = mustFind('redo', HTMLButtonElement);
const sampleEl = mustFind('sample', HTMLButtonElement);
const resetEl = mustFind('reset', HTMLButtonElement);
const saveEl = mustFind('save', HTMLButtonElement);
const loadEl = mustFind('load', HTMLButtonElement);
const noteEl = mustFind('note', HTMLElement);
const errorEl = mustFind('error', HTMLElement);

for (let n = MIN_SIZE; n <= MAX_SIZE; n++) {
  const option = document.createElement('option');
  option.value = String(n);
  option.textContent = `${n} x ${n}`;
  sizeEl.appendChild(option);
}

const controller = new GridController({
  api: new PcmApiClient(),
  debounceMs: DEBOUNCE_MS,
  onChange: render,
});

let builtSize = 0;
const upperInputs = new Map<string, HTMLInputElement>();
const upperCells = new Map<string, HTMLTableCellElement>();
const lowerCells = new Map<string, HTMLTableCellElement>();

function buildGrid(n: number): void {
  upperInputs.clear();
  upperCells.clear();
  lowerCells.clear();
  gridEl.replaceChildren();
  const head = gridEl.createTHead().insertRow();
  head.appendChild(document.createElement('th'));
  for (let j = 1; j <= n; j++) {
    const th = document.createElement('th');
    th.textContent = String(j);
    head.appendChild(th);
  }
  const body = gridEl.createTBody();
  for (let i = 1; i <= n; i++) {
    const row = body.insertRow();
    const label = document.createElement('th');
    label.textContent = String(i);
    row.appendChild(label);
    for (let j = 1; j <= n; j++) {
      const td = row.insertCell();
      if (i === j) {
        td.className = 'diag';
        td.textContent = '1';
      } else if (i < j) {
        td.className = 'upper';
        const input = document.createElement('input');
        input.type = 'text';
        input.autocomplete = 'off';
        input.spellcheck = false;
        input.addEventListener('input', () => {
          controller.editCell(i, j, input.value);
        });
        td.appendChild(input);
        upperInputs.set(`${i},${j}`, input);
        upperCells.set(`${i},${j}`, td);
      } else {
        td.className = 'lower';
        lowerCells.set(`${j},${i}`, td);
      }
    }
  }
  builtSize = n;
}

/** Compact display of an indicator value; never used for grid cells. */
function fmt(value: number | null): string {
  if (value === null) {
    return 'n/a';
  }
  return String(Number(value.toPrecision(6)));
}

function indicatorRow(label: string, value: string): void {
  const dt = document.createElement('dt');
  dt.textContent = label;
  const dd = document.createElement('dd');
  dd.textContent = value;
  indicatorsEl.appendChild(dt);
  indicatorsEl.appendChild(dd);
}

function renderBanner(): void {
  const { analysis, pending } = controller.state;
  bannerEl.classList.toggle('stale', pending);
  if (!analysis) {
    bannerEl.className = 'banner stale';
    bannerEl.textContent = 'Analyzing...';
    return;
  }
  if (analysis.consistent) {
    bannerEl.className = pending ? 'banner ok stale' : 'banner ok';
    bannerEl.textContent = 'Consistent: every triad closes exactly.';
    return;
  }
  const level = analysis.kii !== null && analysis.kii > ACCEPTABLE_KII ? 'bad' : 'warn';
  bannerEl.className = pending ? `banner ${level} stale` : `banner ${level}`;
  const worst = analysis.worst_triad;
  const where = worst ? ` Worst triad: (${worst.i}, ${worst.j}, ${worst.k}).` : '';
  const verdict =
    level === 'bad'
      ? `above the ${fmt(ACCEPTABLE_KII)} acceptability mark`
      : 'within the acceptability mark';
  bannerEl.textContent = `Peak triad inconsistency ${fmt(analysis.kii)}, ${verdict}.${where}`;
}

function renderIndicators(): void {
  const { analysis, pending } = controller.state;
  indicatorsEl.classList.toggle('stale', pending);
  indicatorsEl.replaceChildren();
  if (!analysis) {
    return;
  }
  indicatorRow('Peak triad inconsistency', fmt(analysis.kii));
  indicatorRow('Chain inconsistency', fmt(analysis.chain_ii));
  indicatorRow('Principal eigenvalue', fmt(analysis.lambda_max));
  indicatorRow('Consistency index (CI)', fmt(analysis.ci));
  const cr = analysis.cr === null ? 'n/a' : `${fmt(analysis.cr)} (RI ${fmt(analysis.ri)})`;
  indicatorRow('Consistency ratio (CR)', cr);
  indicatorRow('Weights', analysis.weights.map((w) => fmt(w)).join(', '));
}

function renderGrid(): void {
  const state = controller.state;
  if (state.n !== builtSize) {
    buildGrid(state.n);
  }
  const heat = cellHeat(state.analysis);
  const worst = new Set(worstTriadCells(state.analysis).map(([i, j]) => `${i},${j}`));
  gridEl.classList.toggle('stale', state.pending);
  for (const [key, input] of upperInputs) {
    const [i, j] = key.split(',').map(Number);
    const text = state.upper[upperOffset(state.n, i, j)];
    if (document.activeElement !== input && input.value !== text) {
      input.value = text;
    }
    const td = upperCells.get(key) as HTMLTableCellElement;
    td.classList.toggle('invalid', cellInvalid(state, i, j));
    td.classList.toggle('worst', worst.has(key));
    const ii = heat.get(key) ?? 0;
    td.style.backgroundColor = ii > 0 ? `rgba(214, 69, 35, ${0.12 + 0.38 * ii})` : '';
    const mirror = lowerCells.get(key) as HTMLTableCellElement;
    mirror.textContent = reciprocalText(text);
  }
}

function repairLabel(candidate: RepairCandidate): string {
  const [i, j] = candidate.cell;
  return `a(${i}, ${j}): ${candidate.old} to ${candidate.new}`;
}

function renderWhatIf(): void {
  const { analysis, repairs } = controller.state;
  const show = analysis !== null && !analysis.consistent && repairs !== null && repairs.length > 0;
  whatifEl.hidden = !show;
  whatifListEl.replaceChildren();
  if (!show || repairs === null) {
    return;
  }
  for (const candidate of repairs) {
    const item = document.createElement('li');
    const button = document.createElement('button');
    button.type = 'button';
    button.className = `repair ${repairStatus(candidate.projected_kii)}`;
    button.textContent = `${repairLabel(candidate)}  (peak becomes ${fmt(candidate.projected_kii)})`;
    button.addEventListener('click', () => {
      controller.applyRepair(candidate);
    });
    item.appendChild(button);
    whatifListEl.appendChild(item);
  }
}

function render(): void {
  renderGrid();
  renderBanner();
  renderIndicators();
  renderWhatIf();
  undoEl.disabled = !controller.canUndo;
  redoEl.disabled = !controller.canRedo;
  sizeEl.value = String(controller.state.n);
  errorEl.textContent = controller.lastError ?? '';
}

function flashNote(text: string): void {
  noteEl.textContent = text;
  setTimeout(() => {
    if (noteEl.textContent === text) {
      noteEl.textContent = '';
    }
  }, 2500);
}

sizeEl.addEventListener('change', () => {
  controller.setSize(Number(sizeEl.value));
});
undoEl.addEventListener('click', () => {
  controller.undo();
});
redoEl.addEventListener('click', () => {
  controller.redo();
});
sampleEl.addEventListener('click', () => {
  controller.loadEntries(SAMPLE_ENTRIES);
});
resetEl.addEventListener('click', () => {
  const n = controller.state.n;
  const ones = Array.from({ length: n }, () => new Array<number>(n).fill(1));
  controller.loadEntries(ones);
});
saveEl.addEventListener('click', () => {
  const matrix = matrixFromState(controller.state);
  if (matrix === null) {
    flashNote('Fix the highlighted cells before saving.');
    return;
  }
  const doc: MatrixDocument = { n: controller.state.n, entries: matrix };
  localStorage.setItem(STORAGE_KEY, JSON.stringify(doc));
  flashNote('Saved in this browser.');
});
loadEl.addEventListener('click', () => {
  const raw = localStorage.getItem(STORAGE_KEY);
  if (raw === null) {
    flashNote('Nothing saved yet.');
    return;
  }
  try {
    const doc = JSON.parse(raw) as MatrixDocument;
    if (!Array.isArray(doc.entries) || doc.entries.length < MIN_SIZE) {
      throw new Error('saved matrix is malformed');
    }
    controller.loadEntries(doc.entries);
    flashNote('Loaded saved matrix.');
  } catch {
    flashNote('Saved matrix is unreadable; ignoring it.');
  }
});

buildGrid(controller.state.n);
render();
controller.analyzeNow();
