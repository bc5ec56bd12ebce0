// Wire types for the teaching-session service. These mirror the service's
// JSON payloads exactly; the UI performs no inference of its own.
export {};
